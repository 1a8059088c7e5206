#include <ostream>

#include "commands.hpp"
#include "happy/generators.hpp"
#include "happy/instance_io.hpp"

namespace happy::cli {

int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream&) {
  HappyInstance inst;
  if (opt.gen == "planted") {
    inst = gen_planted(opt.n, opt.k, opt.p_in, opt.p_out, opt.reveal, opt.seed);
  } else if (opt.m) {
    inst = gen_random_exact_m(opt.n, *opt.m, opt.k, opt.reveal, opt.seed, opt.max_weight);
  } else {
    inst = gen_random(opt.n, opt.p, opt.k, opt.reveal, opt.seed, opt.max_weight);
  }
  const std::string text = write_instance(inst);
  if (opt.output.empty()) {
    out << text;
  } else {
    write_file(opt.output, text);
  }
  return kExitOk;
}

}  // namespace happy::cli
