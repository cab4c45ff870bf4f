#pragma once

#include <httplib.h>

#include "service.hpp"

namespace linepush {

// Route /api/* on an httplib server to the service; the service must outlive
// the server.
inline void bind_routes(httplib::Server& srv, const Service& service) {
  auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
    const Response r = service.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
    res.set_header("Access-Control-Allow-Origin", "*");
  };
  srv.Get(R"(/api/.*)", forward);
  srv.Post(R"(/api/.*)", forward);
  srv.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

}  // namespace linepush
