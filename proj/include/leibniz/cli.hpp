#ifndef LEIBNIZ_CLI_HPP
#define LEIBNIZ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace leibniz {

// Full command dispatch; `args` excludes the program name. Returns the
// process exit status: 0 on success (including refuted verify claims),
// 1 on computation/input errors, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace leibniz

#endif
