#pragma once

namespace hyperarr {

/// Selects between an OpenMP kernel and its serial reference implementation.
enum class Exec { Serial, Parallel };

}  // namespace hyperarr
