// Prints the central window of the two-sided Morse sequence and checks that
// it has no overlap BBb.
#include <cstdlib>
#include <iostream>

#include "symdyn/symdyn.hpp"

int main(int argc, char** argv) {
  using namespace symdyn;
  const std::size_t radius = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 8;
  const Substitution mu = morse_substitution();
  const Window m = periodic_window(mu, Seed{0, 0, 2}, radius);
  std::cout << render(mu.alphabet(), m) << '\n';
  if (auto w = find_overlap(m.letters)) {
    std::cout << "overlap at " << w->start << " with |B| = " << w->half_length << '\n';
    return 1;
  }
  std::cout << "overlap-free\n";
  return 0;
}
