#include "palgen/solver.hpp"

int main() {
  const auto r = palgen::mu(palgen::parse_word("00101100"));
  return r.is_exact() && r.value == 5 ? 0 : 1;
}
