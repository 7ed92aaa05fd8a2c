#pragma once

#include <string>
#include <vector>

#include "vermakit/singular.hpp"
#include "vermakit/translate.hpp"
#include "vermakit/weyl_patterns.hpp"

namespace vermakit {

// Renderers. Every function is deterministic byte for byte; JSON output is
// indented by two spaces and ends with a newline. Rationals are written as
// strings ("3/2", "-1").

std::string pattern_text(const PatternGraph& g, const std::vector<PairAnnotation>& pairs = {});
std::string pattern_json(const PatternGraph& g, const std::vector<PairAnnotation>& pairs = {});
/// One rank=same group per length column; cross nodes are drawn as "x".
std::string pattern_dot(const PatternGraph& g, const std::vector<PairAnnotation>& pairs = {});

std::string orbit_text(const std::vector<OrbitElement>& orbit);
std::string orbit_json(const std::vector<OrbitElement>& orbit);

std::string weight_text(const Weight& w);
std::string weight_json(const Weight& w);

std::string singular_text(const SingularVectorReport& r, std::size_t layer_dimension);
std::string singular_json(const SingularVectorReport& r, std::size_t layer_dimension, int n, int p);

std::string scan_text(const std::vector<ScanEntry>& entries);
std::string scan_json(const std::vector<ScanEntry>& entries, int k, int n, int p, Variant variant, SingularTarget target);

std::string cover_text(const AlgebraElement& input, const CoverReport& r);
std::string cover_json(const AlgebraElement& input, const CoverReport& r);

std::string translate_text(const TranslationScreen& s);
std::string translate_json(const TranslationScreen& s);

std::string one_way_text(const OneWayVerdict& v);
std::string one_way_json(const OneWayVerdict& v);

}  // namespace vermakit
