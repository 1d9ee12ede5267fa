#pragma once

#include <filesystem>
#include <string>

#include "ultraposet/verify.hpp"

namespace upo {

/// File formats
///   poset / lattice : {"n": <int>, "leq": [[i, j], ...]}   (covers suffice)
///   monotone map    : {"dom": <file>, "cod": <file>, "values": [<int>, ...]}
///   ultrafilter     : {"m": <int>, "sets": [[...], ...]} or {"m": <int>, "principal": <int>}
///   ultraposet      : {"construction": "discrete"|"canonical"|"mod"|"presheaf"|
///                      "product"|"coproduct", "data": <construction specific>}
/// Parse errors throw errc::parse, filesystem errors errc::io.

std::string read_text_file(const std::filesystem::path& path);

Poset parse_poset_json(const std::string& text);
Poset load_poset(const std::filesystem::path& path);
std::string poset_to_json(const Poset& poset);

DistLattice load_lattice(const std::filesystem::path& path);

/// Hom file; dom/cod paths resolve relative to the hom file's directory.
MonotoneMap load_monotone_map(const std::filesystem::path& path);

Ultrafilter parse_ultrafilter_json(const std::string& text);
std::string ultrafilter_to_json(const Ultrafilter& mu);

Ultraposet parse_ultraposet_json(const std::string& text, long long max_candidates = 10'000'000);
Ultraposet load_ultraposet(const std::filesystem::path& path,
                           long long max_candidates = 10'000'000);
std::string ultraposet_to_json(const Ultraposet& u);

std::string axiom_report_to_json(const AxiomReport& report);
std::string spectrum_to_json(const SpectrumResult& spectrum);

/// Counit and ideal-lattice reconstruction witnesses for one lattice.
std::string reconstruction_to_json(const CounitResult& c, const ReconstructIdlResult& rec);

/// Canonical report serialization. Timing fields are excluded unless
/// include_millis is set, so that identical runs serialize identically.
std::string report_to_json(const DualityReport& report, const std::string& suite,
                           bool include_millis = false);

/// Hasse diagrams (cover relations only), stable node names e0..e(n-1).
std::string poset_to_dot(const Poset& poset, const std::string& graph_name);
std::string spectrum_to_dot(const SpectrumResult& spectrum);
std::string clc_to_dot(const Ultraposet& u, const CheckOptions& opts = {});

}  // namespace upo
