#pragma once

#include <string>

#include "orbvortex/seifert.hpp"
#include "orbvortex/vortex.hpp"

namespace orbvortex {

// Plain-text rendering. Rationals always print as "p/q" (or "p" when
// integral), never as decimals. Output depends only on the input values,
// so repeated runs are byte-identical.

std::string render_surface(const OrbifoldSurface& s);
std::string render_line_bundle(const OrbifoldLineBundle& l);
std::string render_isotropy_pairs(const OrbifoldU2Bundle& e);

/// Four-column table (Isotropy | IrredDim | Flat | AbelianVortices(index))
/// preceded by a short header block. post_quotient subtracts 1 from the
/// positive irreducible dimensions only.
std::string render_moduli_report(const ModuliReport& report, bool post_quotient = false);

std::string render_seifert_report(const SeifertMonopoleReport& report,
                                  bool post_quotient = false);

std::string render_critical_parameters(const CriticalParameters& params);

/// Applies the S^1-quotient convention to a report: positive irreducible
/// dimensions drop by 1, non-positive ones (already empty) are unchanged.
ModuliReport post_quotient_dims(ModuliReport report);

} // namespace orbvortex
