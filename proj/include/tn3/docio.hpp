#ifndef TN3_DOCIO_HPP
#define TN3_DOCIO_HPP

#include <stdexcept>
#include <string>

#include "tn3/classify.hpp"
#include "tn3/descriptor.hpp"

namespace tn3 {

/// Parse failure; `field` names the offending document field.
class DocumentError : public std::runtime_error {
public:
    DocumentError(std::string field, const std::string& message)
        : std::runtime_error("field '" + field + "': " + message),
          field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Parses a descriptor document (JSON object notation; matrices as
/// row-major 4-integer arrays, involutions as {"linear": [...],
/// "translation": ["p/q","r/s"]}). Unknown fields are rejected.
TransnormalDescriptor parse_descriptor(const std::string& text);

/// Deterministic serialization (stable key order) of a descriptor.
std::string serialize_descriptor(const TransnormalDescriptor& d);

/// Full report document: tool version, input echo, classification.
std::string report_document(const TransnormalDescriptor& d,
                            const ClassificationReport& report);

extern const char* const kToolVersion;

} // namespace tn3

#endif
