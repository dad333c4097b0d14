// Searches for a Toeplitz certificate of a substitution minimal set and
// recodes one of its points onto the Toeplitz sequence.
#include <iostream>

#include "symdyn/symdyn.hpp"

int main(int argc, char** argv) {
  using namespace symdyn;
  const Substitution s = parse_substitution(argc > 1 ? argv[1] : "0->12;1->02;2->10");
  const SubstitutionLanguage lang(s);
  const auto cert = search_toeplitz_certificate(lang, 2);
  if (!cert) {
    std::cout << "no Toeplitz certificate with k <= 2\n";
    return 1;
  }
  const Alphabet& a = s.alphabet();
  std::cout << "k=" << cert->k << " C0=" << a.render(cert->c0) << " C1=" << a.render(cert->c1) << '\n';
  const ParseVerdict v = verify_toeplitz_certificate(lang, *cert, default_radius(cert->k));
  const WindowParse& first = v.phases.front();
  std::cout << "phase " << first.phase << ", recoded: "
            << render(Alphabet::binary(), recode_toeplitz(*cert, first)) << '\n';
  return 0;
}
