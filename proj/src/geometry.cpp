#include "calr/geometry.hpp"

#include <cmath>

namespace calr {

void StructureConfig::validate() const {
  if (!(r_i > 0.0)) throw ConfigError("core radius r_i must be > 0");
  if (!(r_e > r_i)) throw ConfigError("shell radius r_e must exceed r_i");
  if (!(eps_core > 0.0)) throw ConfigError("eps_core must be > 0");
  if (!(eps_shell < 0.0)) throw ConfigError("eps_shell must be < 0");
  if (!(delta >= 0.0)) throw ConfigError("loss delta must be >= 0");
  if (dimension != Dim::two && dimension != Dim::three)
    throw ConfigError("dimension must be 2 or 3");
}

ContrastPair contrast_parameters(const StructureConfig& cfg) {
  const cplx id(0.0, cfg.delta);
  const cplx zi = (cfg.eps_core + cfg.eps_shell + id) /
                  (2.0 * (cfg.eps_core - cfg.eps_shell - id));
  const cplx ze = (1.0 + cfg.eps_shell + id) / (2.0 * (1.0 - cfg.eps_shell - id));
  return {zi, ze};
}

std::optional<double> critical_radius(const StructureConfig& cfg) {
  if (cfg.dimension != Dim::two) return std::nullopt;
  if (cfg.eps_shell != -1.0) return std::nullopt;
  if (cfg.eps_core == 1.0) return std::sqrt(cfg.r_e * cfg.r_e * cfg.r_e / cfg.r_i);
  return cfg.r_e * cfg.r_e / cfg.r_i;
}

std::optional<double> bounded_safe_radius(const StructureConfig& cfg) {
  if (cfg.dimension != Dim::two) return std::nullopt;
  if (cfg.eps_shell != -1.0 || cfg.eps_core == 1.0) return std::nullopt;
  return cfg.r_e * cfg.r_e * cfg.r_e / (cfg.r_i * cfg.r_i);
}

}  // namespace calr
