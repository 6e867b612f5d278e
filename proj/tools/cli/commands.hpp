#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "rot4/random.hpp"
#include "rot4/rotation4.hpp"

namespace rot4::cli {

struct Options {
    double eps = 1e-8;
    bool json = false;
    bool normalize = false;
    bool gibbs = false;
    bool check_simple = false;
    std::uint64_t seed = 0;
    SampleKind kind = SampleKind::Any;
    int count = 1;
    // File paths; empty means standard input.
    std::vector<std::string> inputs;
};

/// Classification report for one rotation (the --json form of `classify`).
[[nodiscard]] Json classification_json(const RotationKind& k);

struct VerifyResult {
    std::string formula_kind;
    std::string oracle_kind;
    double angle_discrepancy = 0.0;
    double plane_discrepancy = 0.0;  // 0 when planes are not unique
    bool planes_compared = false;
    bool consistent = false;
    std::string note;
};

/// Formula-side classification against the matrix oracle.
[[nodiscard]] VerifyResult verify_rotation(const Rotation4& r, double eps);

int cmd_classify(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_compose(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_verify(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_random(const Options& opt, std::ostream& out);
int cmd_reflections(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err);

/// Full command line: parses argv, dispatches, maps errors to exit codes.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rot4::cli
