#pragma once

#include <stdexcept>
#include <string>

#include "rgdiff/grid.hpp"

namespace rgdiff {

// NGV container: ASCII magic "NGV1\n", a little-endian uint64 header length,
// a JSON header (shape, spacing, dtype tags, label palette, domain tag,
// subject id), then one raw payload per tensor in header order. Image data is
// little-endian float32, labels are uint8.

enum class NgvErrc {
    IoFailure,
    MalformedHeader,
    ShapeMismatch,
    TruncatedPayload,
    InvalidSpacing,
    InvalidLabel,
};

class NgvError : public std::runtime_error {
public:
    NgvError(NgvErrc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    NgvErrc code() const { return code_; }

private:
    NgvErrc code_;
};

void save_ngv(const CaseRecord& record, const std::string& path);
CaseRecord load_ngv(const std::string& path);

}  // namespace rgdiff
