#ifndef XDN_TOOLS_CLI_HPP
#define XDN_TOOLS_CLI_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "xdn/localsolve.hpp"
#include "xdn/mwsieve.hpp"
#include "xdn/supersingular.hpp"

namespace xdn::cli {

using json = nlohmann::ordered_json;

enum class Format { table, json };

enum exit_code : int {
    exit_ok = 0,
    exit_internal = 1,
    exit_usage = 2,
    exit_undetermined = 3,
};

/*
 * Outcome of one invocation. `document` holds {command, inputs, payload,
 * warnings} and, on failure, an additional `error` {code, message}.
 */
struct CommandResult {
    int exitCode = exit_ok;
    Format format = Format::table;
    json document;
    std::string help; /* subcommand help, filled on usage errors */
};

/* argv excludes the program name. Never throws. */
CommandResult run(std::vector<std::string> const & argv);

/* json: the document, indented; table: a human-readable rendering. */
std::string emit(CommandResult const & result, Format format);

/* Environment variable consulted when --cache-dir is absent. */
inline constexpr char const * cache_env = "XDN_CACHE_DIR";

/* Payload converters, shared with the tests. */
json to_json(Verdict const & v);
json to_json(GlobalReport const & r);
json to_json(std::vector<SearchEntry> const & entries);
json to_json(ScharaschkinResult const & r);
json to_json(Rank0Result const & r);
json to_json(SSCount const & c);

} // namespace xdn::cli

#endif
