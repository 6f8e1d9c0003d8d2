// Prints a builtin model as a model file document, the round-trip
// counterpart of the CLI's --model file loading.
#include <iostream>
#include <string>

#include "sft/modelfile.hpp"

using namespace sft;

int main(int argc, char** argv) {
  if (argc < 2 || argc > 3) {
    std::cerr << "usage: emit_model <builtin> [weight]\n"
              << "builtins: circle, sphere3, lens:<l>, ellipsoid:<n>, cp1, fibered:<l>\n";
    return 2;
  }
  long weight = argc == 3 ? std::stol(argv[2]) : 6;
  try {
    LoadedModel lm = load_builtin(argv[1], weight);
    if (lm.kind == "hamiltonian")
      std::cout << model_file_json(*lm.hamiltonian, lm.policy);
    else if (lm.kind == "differential")
      std::cout << dga_file_json(*lm.dga, 2, lm.policy);
    else if (lm.kind == "potential")
      std::cout << potential_file_json(*lm.potential, lm.policy);
    else
      std::cout << floer_file_json(lm.floer->spec);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
