#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "specmom/function.hpp"
#include "specmom/group.hpp"
#include "specmom/models.hpp"
#include "specmom/moments.hpp"
#include "specmom/symbolic.hpp"

namespace specmom {

// Spectrum file (JSON):
//   {"moduli":[N1,...,Nn], "ordering":"msf"|"lsf",
//    "coefficients":[{"index":int-or-tuple, "re":float, "im":float}, ...]}
// "ordering" is optional (defaults to lsf when all moduli are 2, msf
// otherwise). "index" is an ordinal or a digit tuple.
SparseSpectrum read_spectrum_json(const std::string& path);
SparseSpectrum parse_spectrum_json(const std::string& text);
std::string spectrum_to_json(const SparseSpectrum& s);
void write_spectrum_json(const std::string& path, const SparseSpectrum& s);

// Function file (CSV): header "ordinal,re,im", one row per ordinal. The "im"
// column may be omitted. When no group is given the rows are taken as a
// single cycle of length #rows.
DenseFunction read_function_csv(const std::string& path,
                                std::optional<GroupSpec> group = std::nullopt,
                                Side side = Side::Primal);
void write_function_csv(const std::string& path, const DenseFunction& f);

// Graph design file (JSON):
//   {"n":4, "vertex_effects":[...] (or "vertex_effect":d),
//    "edges":[{"u":1,"v":2,"w":-0.1},...],
//    "hyperedges":[{"set":[1,2,3],"w":0.05},...]}
GraphBetSpec read_graph_json(const std::string& path);

// Feasibility input (JSON):
//   {"group":"64"|{"moduli":[...]},
//    "entries":[{"index":j,"magnitude":m,"phase":radians},...],
//    "targets":[{"order":3,"re":0,"im":0},...], "mode":"raw"|"central"}
struct FeasibilityInput {
    GroupSpec group;
    std::map<ordinal_t, double> magnitudes;
    std::map<ordinal_t, double> phases;
    std::map<int, cplx> targets;
    CenterMode mode = CenterMode::Central;
};
FeasibilityInput read_feasibility_json(const std::string& path);

void write_table_csv(std::ostream& os, const SubtractionTable& table);

std::string moment_report_text(const MomentReport& rep);
std::string moment_report_json(const MomentReport& rep);

std::string symbolic_to_json(const SymbolicMoment& sym);

/// value,count rows of the (real) values of f, grouped at 1e-9 resolution.
std::string histogram_csv(const DenseFunction& f);

/// Fixed-precision decimal used by every text/CSV emitter.
std::string format_double(double v, int decimals = 4);

} // namespace specmom
