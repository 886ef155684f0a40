#ifndef QFE_CLI_HPP
#define QFE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qfe {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainFailure = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfe

#endif  // QFE_CLI_HPP
