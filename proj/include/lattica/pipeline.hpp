#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lattica/config.hpp"
#include "lattica/context.hpp"
#include "lattica/lattice.hpp"
#include "lattica/rational.hpp"
#include "lattica/scaling.hpp"

namespace lattica {

/// One line of the per-entity view statistics table.
struct ReportRow {
    std::string entity;
    std::size_t objects = 0;
    std::size_t attributes = 0;
    double density = 0;
    std::size_t concepts = 0;
    std::size_t core_concepts = 0;  // concepts of the (p,q)-core
    std::size_t view_concepts = 0;  // frequent intents at minsupp
};

/// For each entity: restrict the matrix to its documents, scale at delta and
/// count concepts of the context, its (p,q)-core and its minsupp-iceberg.
std::vector<ReportRow> entity_report(const WeightMatrix& dt, const EntityIndex& index,
                                     const std::vector<std::string>& entities, double delta, std::size_t p,
                                     std::size_t q, const Rational& minsupp, const EnumerationOptions& opts = {});

/// Tab-separated table, density with three decimals.
std::string report_to_tsv(const std::vector<ReportRow>& rows);

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_input_error = 2, exit_ceiling = 3 };

/// Full command-line entry point; args[0] is the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lattica
