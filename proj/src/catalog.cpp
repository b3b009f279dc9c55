#include <string>

#include "gcakit/errors.hpp"
#include "gcakit/repbuilder.hpp"

namespace gcakit {

MonomialMatrix sigma1() { return MonomialMatrix::permutation({1, 0}); }

MonomialMatrix sigma2() {
  // [[0, -i], [i, 0]]
  return MonomialMatrix({1, 0}, {Phase(1, 4), Phase(3, 4)});
}

MonomialMatrix sigma3() { return MonomialMatrix::diagonal({Phase::one(), Phase(1, 2)}); }

std::vector<std::string> catalog_names() {
  return {"pauli", "quaternion", "dirac", "dirac_positive_energy"};
}

std::vector<NamedMatrix> catalog(std::string_view name) {
  const auto i2 = MonomialMatrix::identity(2);
  const Phase plus_i(1, 4);
  const Phase minus_i(3, 4);
  const Phase minus_one(1, 2);
  if (name == "pauli") {
    return {{"sigma1", sigma1()}, {"sigma2", sigma2()}, {"sigma3", sigma3()}};
  }
  if (name == "quaternion") {
    return {{"1", i2},
            {"i", minus_i * sigma1()},
            {"j", minus_i * sigma3()},
            {"k", plus_i * sigma2()}};
  }
  if (name == "dirac") {
    return {{"alpha_x", tensor(sigma1(), sigma1())},
            {"alpha_y", tensor(sigma1(), sigma2())},
            {"alpha_z", tensor(sigma1(), sigma3())},
            {"beta", tensor(sigma3(), i2)}};
  }
  if (name == "dirac_positive_energy") {
    return {{"beta'", tensor(sigma2(), i2)},
            {"alpha_x'", minus_one * tensor(sigma1(), sigma3())},
            {"alpha_y'", tensor(sigma1(), sigma1())},
            {"alpha_z'", tensor(sigma3(), i2)}};
  }
  throw Error(ErrorCode::UnknownName, "unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace gcakit
