#include <ostream>

#include <json.hpp>

#include "commands.hpp"
#include "happy/errors.hpp"
#include "happy/instance_io.hpp"
#include "happy/reductions.hpp"

namespace happy::cli {
namespace {

nlohmann::json value_map_json(const ReductionOutput& r) {
  if (const auto* affine = std::get_if<AffineValueMap>(&r.value_map)) {
    return {{"kind", "affine"}, {"a", affine->a}, {"b", affine->b}};
  }
  const auto& iff = std::get<SoftIffRelation>(r.value_map);
  return {{"kind", "soft-iff"}, {"max_degree", iff.max_degree}, {"n", iff.n},
          {"m", iff.m},         {"h", iff.h},                   {"k", iff.k},
          {"offset", iff.offset()}};
}

nlohmann::json params_json(const GadgetParams& p) {
  nlohmann::json j = nlohmann::json::object();
  if (p.k) j["k"] = *p.k;
  if (p.h) j["h"] = *p.h;
  if (p.q) j["q"] = *p.q;
  if (p.max_degree) j["max_degree"] = *p.max_degree;
  return j;
}

ReductionOutput build(const ReduceOptions& opt, const std::string& text) {
  if (opt.from == "mwc3") {
    if (opt.to != "mhe3") throw ContractError("--from mwc3 supports only --to mhe3");
    return multiway_cut_to_3mhe(parse_multiway_cut(text));
  }
  const HappyInstance source = parse_instance(text);
  if (opt.to == "mhe3") throw ContractError("--to mhe3 needs --from mwc3");
  if (opt.to == "mhek") return pad_3mhe_to_kmhe(source, opt.k);
  if (opt.to == "mhv") return mhe_to_mhv(source);
  if (opt.to == "hard") return mhe_to_hardmhv(source);
  return mhe_to_softmhv(source, parse_rational(opt.rho));
}

}  // namespace

int cmd_reduce(const ReduceOptions& opt, std::ostream& out, std::ostream&) {
  const ReductionOutput reduction = build(opt, read_file(opt.input));
  const std::string target_path = opt.output.empty() ? opt.input + "." + opt.to : opt.output;
  write_file(target_path, write_instance(reduction.target));

  nlohmann::json sidecar = {
      {"reduction", std::string(to_string(reduction.kind))},
      {"source", opt.input},
      {"target", target_path},
      {"target_problem", std::string(to_string(reduction.target_problem))},
      {"target_n", reduction.target.graph.vertex_count()},
      {"target_m", reduction.target.graph.edge_count()},
      {"value_map", value_map_json(reduction)},
      {"params", params_json(reduction.params)},
  };

  int code = kExitOk;
  if (opt.verify) {
    const ReductionVerdict verdict = verify_reduction(reduction, opt.budget);
    nlohmann::json v = {{"status", std::string(to_string(verdict.status))},
                        {"detail", verdict.detail}};
    if (verdict.source_opt) v["source_opt"] = format_rational(*verdict.source_opt);
    if (verdict.target_opt) v["target_opt"] = format_rational(*verdict.target_opt);
    sidecar["verdict"] = v;
    out << "verdict: " << to_string(verdict.status) << " (" << verdict.detail << ")\n";
    if (verdict.status == ReductionVerdict::Status::Fails) code = kExitPropertyFailed;
  }
  write_file(target_path + ".map.json", sidecar.dump(2) + "\n");
  out << "target: " << target_path << '\n';
  out << "map: " << target_path << ".map.json\n";
  out << "value_map: " << value_map_json(reduction).dump() << '\n';
  return code;
}

}  // namespace happy::cli
