#include "wecopt/hydrodyn/drag.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wecopt/errors.hpp"

namespace wecopt {

double HeaveDragCoefficient(double aspect_ratio) {
  if (!(aspect_ratio >= 0.0) || !std::isfinite(aspect_ratio)) {
    throw DomainError("aspect ratio must be >= 0");
  }
  return std::max(0.0, -0.12 * aspect_ratio + 1.2);
}

void DragModel::Validate() const {
  for (int i = 0; i < 6; ++i) {
    if (!(cd[i] >= 0.0) || !std::isfinite(cd[i]) || !(areas[i] >= 0.0) ||
        !std::isfinite(areas[i])) {
      throw DomainError("drag model entries must be finite and >= 0");
    }
  }
}

DragModel BuildDragModel(const WecGeometry& geom) {
  geom.Validate();
  const double a = geom.radius;
  const double h = geom.height;
  const double arm = 0.5 * h;

  DragModel drag;
  drag.cd = {1.0, 1.0, HeaveDragCoefficient(geom.AspectRatio()), 0.2, 0.2, 0.0};
  const double projected = 2.0 * a * h;
  const double rotational = projected * arm * arm * arm;
  drag.areas = {projected,  projected,
                std::numbers::pi * a * a,
                rotational, rotational,
                2.0 * std::numbers::pi * a * h * a * a * a};
  return drag;
}

}  // namespace wecopt
