#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <httplib.h>

#include "islm/api.hpp"

int main(int argc, char** argv) {
  std::string host = "127.0.0.1";
  int port = 8080;
  if (const char* env = std::getenv("ISLM_HOST")) host = env;
  if (const char* env = std::getenv("ISLM_PORT")) port = std::atoi(env);

  CLI::App app{"IS-LM compute service", "islm-server"};
  app.add_option("--host", host, "Bind address (env ISLM_HOST)");
  app.add_option("--port", port, "Port (env ISLM_PORT)")->check(CLI::Range(1, 65535));
  CLI11_PARSE(app, argc, argv);

  httplib::Server server;
  islm::api::install_routes(server);
  std::cerr << "islm-server listening on " << host << ":" << port << "\n";
  if (!server.listen(host, port)) {
    std::cerr << "failed to bind " << host << ":" << port << "\n";
    return 1;
  }
  return 0;
}
