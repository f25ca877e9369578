#pragma once

// Text formats: JSONL signature records, JSON reports, SVG layouts.
// Rationals are always "p/q" strings; integers are JSON numbers when they fit
// in 64 bits and decimal strings otherwise.

#include <string>
#include <string_view>
#include <vector>

#include "mtp/hunt.hpp"
#include "mtp/signature.hpp"
#include "mtp/tiler.hpp"
#include "mtp/verify.hpp"

namespace mtp {

/// One compact JSON object, no trailing newline:
/// {"a":4,"classes":[[1,4],[2,3]],"N":7,"k":2,"sigma":"5/2","gamma":"9/4","delta":"-4","exceeds":false,"attains":true}
/// k is null (and exceeds/attains false) when the tile count is not k^2+3.
[[nodiscard]] std::string signature_record(const Signature& sig);

/// Reads back the "a" and "classes" fields. Throws mtp::Error(ParseError) on
/// malformed JSON and the usual make_signature errors on invalid content.
[[nodiscard]] Signature parse_signature_record(std::string_view line);

/// "1:4,2:3" -> [(1,4),(2,3)]. Throws mtp::Error(ParseError).
[[nodiscard]] std::vector<SizeClass> parse_class_list(std::string_view text);

/// SVG 1.1 with viewBox "0 0 a a" and one <rect> per placement.
[[nodiscard]] std::string layout_svg(const Layout& layout);

[[nodiscard]] std::string hunt_report_json(const HuntReport& report);

[[nodiscard]] std::string verify_report_json(const VerifyReport& report);
/// Human-readable per-check lines, one per check, plus counters.
[[nodiscard]] std::string verify_report_text(const VerifyReport& report);

}  // namespace mtp
