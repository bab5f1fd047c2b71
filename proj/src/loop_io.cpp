#include "looplab/loop_io.hpp"

#include "looplab/errors.hpp"

namespace looplab {

nlohmann::json loop_to_json(const LaurentLoop& g) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int n = g.n_min(); n <= g.n_max(); ++n) {
    const Matrix& c = g.coeff_ref(n);
    for (int r = 0; r < g.dim(); ++r)
      for (int s = 0; s < g.dim(); ++s) coeffs.push_back({c(r, s).real(), c(r, s).imag()});
  }
  return {{"dim", g.dim()}, {"n_min", g.n_min()}, {"n_max", g.n_max()}, {"coeffs", std::move(coeffs)}};
}

LaurentLoop loop_from_json(const nlohmann::json& j) {
  try {
    const int dim = j.at("dim").get<int>();
    const int n_min = j.at("n_min").get<int>();
    const int n_max = j.at("n_max").get<int>();
    const auto& coeffs = j.at("coeffs");
    LaurentLoop g(dim, n_min, n_max);
    const std::size_t expected = static_cast<std::size_t>(g.mode_count()) * dim * dim;
    if (coeffs.size() != expected) throw InvalidInput("loop json: coefficient count does not match band");
    std::size_t idx = 0;
    for (int n = n_min; n <= n_max; ++n) {
      Matrix& c = g.coeff_ref(n);
      for (int r = 0; r < dim; ++r)
        for (int s = 0; s < dim; ++s, ++idx) c(r, s) = {coeffs[idx].at(0).get<double>(), coeffs[idx].at(1).get<double>()};
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("loop json: ") + e.what());
  }
}

std::string dump_loop(const LaurentLoop& g) { return loop_to_json(g).dump(); }

LaurentLoop parse_loop(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("loop json: ") + e.what());
  }
  return loop_from_json(j);
}

}  // namespace looplab
