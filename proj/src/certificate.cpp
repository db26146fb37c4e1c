#include "rforge/certificate.hpp"

#include <json.hpp>

namespace rforge::certificate {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string body_bytes(const coloring::MultipartiteColoring& col, int target_m) {
  std::string bytes = "c=" + std::to_string(col.parts()) + ";s=" + std::to_string(col.part_size()) +
                      ";k=" + std::to_string(col.num_colors()) + ";m=" + std::to_string(target_m) +
                      ";";
  for (const auto& [u, v] : col.canonical_edges())
    bytes.push_back(static_cast<char>(col.color(u, v)));
  return bytes;
}

ordered_json witness_json(const coloring::MultipartiteColoring& col,
                          const coloring::DeltaWitness& w) {
  const auto [p1, s1] = col.part_slot(w.v1);
  const auto [p2, s2] = col.part_slot(w.v2);
  ordered_json j;
  j["v1"] = {p1, s1};
  j["v2"] = {p2, s2};
  j["color"] = w.w;
  j["delta"] = w.value;
  return j;
}

}  // namespace

std::string fnv1a64_hex(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string write(const coloring::MultipartiteColoring& col,
                  const coloring::AvoidanceCertificate& cert, const Provenance& prov) {
  ordered_json j;
  j["format"] = "ramsey-forge-certificate-v1";

  ordered_json header;
  header["c"] = col.parts();
  header["s"] = col.part_size();
  header["num_colors"] = col.num_colors();
  ordered_json pj;
  pj["generator"] = prov.generator;
  if (prov.srg_params) {
    pj["srg"] = {{"n", prov.srg_params->n},
                 {"k", prov.srg_params->k},
                 {"lambda", prov.srg_params->lambda},
                 {"mu", prov.srg_params->mu}};
    if (!prov.srg_hash.empty()) pj["srg_hash"] = "fnv1a64:" + prov.srg_hash;
  }
  if (!prov.matrix_source.empty()) {
    pj["matrix"] = prov.matrix_source;
    if (!prov.matrix_hash.empty()) pj["matrix_hash"] = "fnv1a64:" + prov.matrix_hash;
  }
  if (prov.delta_bound) pj["delta_bound"] = *prov.delta_bound;
  if (prov.delta_bound_unpadded) pj["delta_bound_unpadded"] = *prov.delta_bound_unpadded;
  pj["body_hash"] = "fnv1a64:" + fnv1a64_hex(body_bytes(col, cert.target_m));
  header["provenance"] = pj;
  j["header"] = header;

  j["edge_order"] = "cross pairs (u,v), u<v, by flattened 0-based id";
  std::vector<int> colors;
  for (const auto& [u, v] : col.canonical_edges()) colors.push_back(col.color(u, v));
  j["colors"] = colors;

  ordered_json footer;
  footer["target"] = {2, cert.target_m};
  footer["max_delta"] = cert.max_delta;
  footer["witness"] = witness_json(col, cert.witness);
  footer["verdict"] = cert.avoided() ? "avoided" : "violated";
  j["footer"] = footer;

  return j.dump(2) + "\n";
}

Loaded read(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(errc::format_error, std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != "ramsey-forge-certificate-v1")
      fail(errc::format_error, "unknown certificate format tag");
    const auto& header = j.at("header");
    const int c = header.at("c").get<int>();
    const int s = header.at("s").get<int>();
    const int k = header.at("num_colors").get<int>();
    const auto& footer = j.at("footer");
    const auto target = footer.at("target");
    if (!target.is_array() || target.size() != 2 || target.at(0).get<int>() != 2)
      fail(errc::format_error, "certificate target must be a biclique (2, m)");
    const int m = target.at(1).get<int>();
    if (m < 1) fail(errc::format_error, "target width must be >= 1");

    coloring::MultipartiteColoring col(c, s, k);
    const auto edges = col.canonical_edges();
    const auto& colors = j.at("colors");
    if (!colors.is_array() || colors.size() != edges.size())
      fail(errc::format_error, "color list length does not match the edge count");
    for (size_t i = 0; i < edges.size(); ++i)
      col.set_color(edges[i].first, edges[i].second, colors.at(i).get<int>());

    Loaded out{std::move(col), Provenance{}, m, footer.at("max_delta").get<long long>(),
               footer.at("verdict").get<std::string>(), coloring::DeltaWitness{}, "", ""};

    const auto& pj = header.at("provenance");
    out.provenance.generator = pj.value("generator", "");
    if (pj.contains("srg")) {
      const auto& sj = pj.at("srg");
      out.provenance.srg_params = srg::SrgParams{
          sj.at("n").get<long long>(), sj.at("k").get<long long>(),
          sj.at("lambda").get<long long>(), sj.at("mu").get<long long>()};
    }
    out.provenance.matrix_source = pj.value("matrix", "");
    std::string stored = pj.value("body_hash", "");
    if (stored.rfind("fnv1a64:", 0) == 0) stored = stored.substr(8);
    out.stored_body_hash = stored;
    out.computed_body_hash = fnv1a64_hex(body_bytes(out.coloring, m));

    if (footer.contains("witness")) {
      const auto& wj = footer.at("witness");
      const auto v1 = wj.at("v1"), v2 = wj.at("v2");
      out.stated_witness.v1 = out.coloring.flat_id(v1.at(0).get<int>(), v1.at(1).get<int>());
      out.stated_witness.v2 = out.coloring.flat_id(v2.at(0).get<int>(), v2.at(1).get<int>());
      out.stated_witness.w = wj.at("color").get<int>();
      out.stated_witness.value = wj.at("delta").get<long long>();
    }
    return out;
  } catch (const ordered_json::exception& e) {
    fail(errc::format_error, std::string("certificate is missing fields: ") + e.what());
  }
}

VerifyOutcome verify(const Loaded& loaded, std::optional<int> override_m) {
  const int m = override_m.value_or(loaded.target_m);
  if (m < 1) fail(errc::invalid_input, "target width must be >= 1");
  VerifyOutcome out{};
  out.effective_m = m;
  out.tampered = !loaded.hash_ok();
  out.recheck = coloring::certify_avoidance(loaded.coloring, m);
  out.avoided = out.recheck.avoided();
  const bool footer_delta_ok = out.recheck.max_delta == loaded.stated_max_delta;
  const bool footer_verdict_ok =
      loaded.stated_verdict ==
      ((loaded.stated_max_delta <= loaded.target_m - 1) ? "avoided" : "violated") &&
      (m != loaded.target_m ||
       loaded.stated_verdict == (out.recheck.avoided() ? "avoided" : "violated"));
  out.consistent = footer_delta_ok && footer_verdict_ok;
  return out;
}

}  // namespace rforge::certificate
