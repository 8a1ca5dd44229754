#pragma once

namespace dk {

  // Selects the OpenMP kernels or their serial reference counterparts.
  enum class Exec { serial, parallel };

}  // namespace dk
