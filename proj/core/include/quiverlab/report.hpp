#pragma once

#include <string>

#include "quiverlab/green_search.hpp"
#include "quiverlab/module_enum.hpp"
#include "quiverlab/orthogonality.hpp"

// Human-readable renderings. Structured output lives in serialize.hpp.
namespace qlab::report {

/// "(1,0,-1)"
std::string vector_text(const IntVector& v);

std::string state_text(const SearchState& s);
std::string mgs_text(const MgsResult& r);
/// First line is "count=C p=P m=M".
std::string spectrum_text(const SpectrumReport& s);
std::string catalog_text(const ModuleCatalog& c);
std::string mfho_text(const MfhoResult& r);
std::string verification_text(const VerificationReport& r);
std::string correspondence_text(const CorrespondenceReport& r);
std::string conjecture_text(const ConjectureReport& r);

}  // namespace qlab::report
