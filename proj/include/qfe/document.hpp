#ifndef QFE_DOCUMENT_HPP
#define QFE_DOCUMENT_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "qfe/solutions.hpp"
#include "qfe/structure.hpp"

namespace qfe {

// Malformed or schema-violating JSON document.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"primes": [2, 5, 7], "generators": {"2": "<expr>", ...}}
SolutionSpec parse_spec_document(std::string_view json_text);
std::string write_spec_document(const SolutionSpec& spec);

// {"primes": [...], "lambda": {"2": "1", ...}, "t0": "0",
//  "terms": [{"r": 1, "t": -1}, ...]}
StructureData parse_structure_document(std::string_view json_text);
std::string write_structure_document(const StructureData& sd);

// Reads a whole file; DocumentError if it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace qfe

#endif  // QFE_DOCUMENT_HPP
