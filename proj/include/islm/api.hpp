#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace islm::api {

/// Error codes carried by every non-2xx response body.
enum class ErrorCode { BadRequest, InvalidParameters, UnknownPlot, Internal };

std::string_view to_string(ErrorCode code);

struct Limits {
  std::size_t max_body_bytes = 64 * 1024;
  int max_grid_points = 10'000;
};

struct Response {
  int status = 200;
  std::string content_type;
  std::string body;
};

/// Stateless request handler. Every request carries the full scenario
/// document; nothing is retained between calls.
///
///   GET  /healthz
///   GET  /api/v1/defaults
///   POST /api/v1/solve    { "scenarios": [...] }
///   POST /api/v1/curves   { "scenarios": [...], "slot": 1, "plot": "islm", "grid": {min, max, n} }
///   POST /api/v1/compare  { "scenarios": [...], "slots": [1, 2, 3] }
Response handle(std::string_view method, std::string_view path, std::string_view body,
                const Limits& limits = {});

/// Body of an ApiError response.
std::string error_body(ErrorCode code, const std::string& message,
                       const std::string& field_path = "");

/// Registers the routes on `server`, with permissive CORS headers.
void install_routes(httplib::Server& server, const Limits& limits = {});

}  // namespace islm::api
