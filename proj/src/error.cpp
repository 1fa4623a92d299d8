#include "sr2se/error.hpp"

namespace sr2se {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kEmpty: return "empty input";
    case ParseErrorKind::kBadLength: return "malformed length field";
    case ParseErrorKind::kTruncated: return "truncated input";
    case ParseErrorKind::kTrailingBits: return "nonzero trailing bits";
    case ParseErrorKind::kNonPrintable: return "non-printable byte";
    case ParseErrorKind::kBadHeader: return "bad header";
    case ParseErrorKind::kBadToken: return "bad token";
    case ParseErrorKind::kOutOfRange: return "vertex out of range";
    case ParseErrorKind::kDuplicateEdge: return "duplicate edge";
    case ParseErrorKind::kBadSign: return "bad sign token";
    case ParseErrorKind::kBadRowLength: return "wrong row length";
    case ParseErrorKind::kBadCharacter: return "bad character";
    case ParseErrorKind::kNotWeighing: return "not a weighing matrix";
  }
  return "parse error";
}

}  // namespace sr2se
