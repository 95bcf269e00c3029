#include "islm/api.hpp"

#include <httplib.h>

#include "islm/document.hpp"
#include "islm/errors.hpp"

namespace islm::api {

namespace {

constexpr const char* kJson = "application/json";

Response json_response(int status, std::string body) { return {status, kJson, std::move(body)}; }

Response error_response(int status, ErrorCode code, const std::string& message,
                        const std::string& field_path = "") {
  return json_response(status, error_body(code, message, field_path));
}

ErrorCode code_for(DocumentError::Kind kind) {
  switch (kind) {
    case DocumentError::Kind::InvalidParameters: return ErrorCode::InvalidParameters;
    case DocumentError::Kind::UnknownPlot: return ErrorCode::UnknownPlot;
    default: return ErrorCode::BadRequest;
  }
}

Response solve(const Json& body) {
  return json_response(200, dump_structured(solve_results_to_json(scenario_set_from_json(body))));
}

Response curves(const Json& body, const Limits& limits) {
  const ScenarioSet set = scenario_set_from_json(body);
  const auto plot_it = body.find("plot");
  if (plot_it == body.end()) throw DocumentError(DocumentError::Kind::UnknownPlot, "plot", "missing");
  const Plot plot = plot_from_json(*plot_it, "plot");
  int slot = 1;
  if (auto it = body.find("slot"); it != body.end()) slot = slot_from_json(*it, "slot");

  Grid grid = default_grid(set, slot, plot);
  if (auto it = body.find("grid"); it != body.end()) grid = grid_from_json(*it, "grid", grid);
  if (grid.n > limits.max_grid_points) {
    throw DocumentError(DocumentError::Kind::InvalidGrid, "grid.n",
                        "at most " + std::to_string(limits.max_grid_points) + " grid points");
  }
  return json_response(
      200, dump_structured(curves_to_json(plot, slot, grid, sample_curves(set, slot, plot, grid))));
}

Response compare_slots(const Json& body) {
  const ScenarioSet set = scenario_set_from_json(body);
  std::vector<int> slots = {1, 2, 3};
  if (auto it = body.find("slots"); it != body.end()) slots = slots_from_json(*it, "slots");
  return json_response(200, dump_structured(comparison_to_json(compare(set, slots))));
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadRequest: return "BadRequest";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::UnknownPlot: return "UnknownPlot";
    case ErrorCode::Internal: return "Internal";
  }
  return "Internal";
}

std::string error_body(ErrorCode code, const std::string& message, const std::string& field_path) {
  OrderedJson out;
  out["code"] = std::string(to_string(code));
  out["message"] = message;
  if (!field_path.empty()) out["field_path"] = field_path;
  return dump_structured(out);
}

Response handle(std::string_view method, std::string_view path, std::string_view body,
                const Limits& limits) {
  const bool get = method == "GET";
  const bool post = method == "POST";

  if (path == "/healthz") {
    if (!get) return error_response(405, ErrorCode::BadRequest, "use GET");
    return {200, "text/plain", "ok\n"};
  }
  if (path == "/api/v1/defaults") {
    if (!get) return error_response(405, ErrorCode::BadRequest, "use GET");
    return json_response(200, dump_scenario_document(create_scenario_set()));
  }
  if (path != "/api/v1/solve" && path != "/api/v1/curves" && path != "/api/v1/compare") {
    return error_response(404, ErrorCode::BadRequest, "no such endpoint: " + std::string(path));
  }
  if (!post) return error_response(405, ErrorCode::BadRequest, "use POST");
  if (body.size() > limits.max_body_bytes) {
    return error_response(413, ErrorCode::BadRequest,
                          "request body exceeds " + std::to_string(limits.max_body_bytes) + " bytes");
  }

  try {
    const Json doc = parse_json(body);
    if (path == "/api/v1/solve") return solve(doc);
    if (path == "/api/v1/curves") return curves(doc, limits);
    return compare_slots(doc);
  } catch (const DocumentError& e) {
    return error_response(400, code_for(e.kind()), e.what(), e.field_path());
  } catch (const UnknownPlot& e) {
    return error_response(400, ErrorCode::UnknownPlot, e.what());
  } catch (const InvalidParameters& e) {
    return error_response(400, ErrorCode::InvalidParameters, e.what(), e.field());
  } catch (const Error& e) {
    return error_response(400, ErrorCode::BadRequest, e.what());
  } catch (const std::exception& e) {
    return error_response(500, ErrorCode::Internal, e.what());
  }
}

void install_routes(httplib::Server& server, const Limits& limits) {
  server.set_payload_max_length(limits.max_body_bytes);
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});

  auto dispatch = [limits](const httplib::Request& req, httplib::Response& res) {
    const Response r = handle(req.method, req.path, req.body, limits);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  server.Get(R"(/.*)", dispatch);
  server.Post(R"(/.*)", dispatch);
  server.Put(R"(/.*)", dispatch);
  server.Delete(R"(/.*)", dispatch);
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });

  // Responses httplib produces on its own (e.g. 413) still carry an ApiError.
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    const ErrorCode code = res.status >= 500 ? ErrorCode::Internal : ErrorCode::BadRequest;
    res.set_content(error_body(code, httplib::status_message(res.status)), kJson);
  });
  server.set_exception_handler(
      [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string message = "internal error";
        try {
          if (ep) std::rethrow_exception(ep);
        } catch (const std::exception& e) {
          message = e.what();
        } catch (...) {
        }
        res.status = 500;
        res.set_content(error_body(ErrorCode::Internal, message), kJson);
      });
}

}  // namespace islm::api
