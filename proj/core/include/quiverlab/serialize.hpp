#pragma once

#include <nlohmann/json.hpp>

#include "quiverlab/green_search.hpp"
#include "quiverlab/module_enum.hpp"
#include "quiverlab/orthogonality.hpp"
#include "quiverlab/problem.hpp"

// JSON forms of the domain values. Rationals are written as "p" or "p/q"
// strings so that structured output is exact and byte-stable.
namespace qlab::json_io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json ice_quiver(const IceQuiver& iq);
json exchange_matrix(const ExchangeMatrix& e);
json c_matrix(const CMatrix& c);

/// Arrows, colors, exchange and c-matrix, history, trace and all_red of a
/// framed-quiver state.
json search_state(const SearchState& s);

json green_sequence(const GreenSequence& s);
GreenSequence green_sequence_from(const json& j);

json mgs_result(const MgsResult& r);
MgsResult mgs_result_from(const json& j);

json spectrum(const SpectrumReport& s);

json representation(const Representation& m, const NamedQuiver& quiver);
Representation representation_from(const json& j, const NamedQuiver& quiver);

/// The algebra itself is not embedded; pass it back in when re-reading.
json catalog(const ModuleCatalog& c);
ModuleCatalog catalog_from(const json& j, const BoundQuiver& algebra);

json mfho_result(const MfhoResult& r);
json correspondence_report(const CorrespondenceReport& r);
json verification_report(const VerificationReport& r);
json conjecture_report(const ConjectureReport& r);

json problem(const ProblemFile& p);

}  // namespace qlab::json_io
