#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <type_traits>
#include <utility>
#include <variant>

#include <CLI11.hpp>

#include "rot4/compose.hpp"
#include "rot4/error.hpp"
#include "rot4/oracle.hpp"

namespace rot4::cli {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

std::vector<Json> read_inputs(const Options& opt, std::istream& in) {
    if (opt.inputs.empty()) return read_json_values(in);
    std::vector<Json> values;
    for (const std::string& path : opt.inputs) {
        std::ifstream file(path);
        if (!file) throw CliError(kExitMalformed, "cannot open input file: " + path);
        auto part = read_json_values(file);
        values.insert(values.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return values;
}

std::vector<Rotation4> read_rotations(const Options& opt, std::istream& in) {
    std::vector<Rotation4> out;
    for (const RotationDoc& d : collect_docs(read_inputs(opt, in))) out.push_back(to_rotation(d, opt.normalize));
    if (out.empty()) throw CliError(kExitMalformed, "no rotation document on input");
    return out;
}

std::string angle_text(double rad) { return fmt6(rad) + " rad (" + fmt6(rad * kDegPerRad) + " deg)"; }

Json plane_entry(const char* role, const Plane& p, double angle) {
    Json j;
    j["role"] = role;
    j["angle"] = angle;
    j["plane"] = plane_json(p);
    j["projector"] = matrix_json(p.projector());
    return j;
}

void print_projector(std::ostream& out, const Plane& p) {
    const Matrix4 m = p.projector();
    for (int r = 0; r < 4; ++r) {
        out << "    [";
        for (int c = 0; c < 4; ++c) out << (c ? ", " : "") << fmt6(m.m[r][c]);
        out << "]\n";
    }
}

void print_classification(std::ostream& out, const RotationKind& k) {
    out << "kind: " << kind_name(k) << '\n';
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, kind::Identity>) {
                out << "every vector is fixed\n";
            } else if constexpr (std::is_same_v<T, kind::LeftIsoclinic> || std::is_same_v<T, kind::RightIsoclinic>) {
                out << "angle: " << angle_text(v.angle) << " (every vector turns by this angle)\n";
                out << "invariant planes: not unique (Sp{x, px} for every x)\n";
            } else if constexpr (std::is_same_v<T, kind::Simple>) {
                out << "angle: " << angle_text(v.angle) << '\n';
                out << "fixed plane:    " << plane_text(v.fixed_plane) << '\n';
                print_projector(out, v.fixed_plane);
                out << "rotation plane: " << plane_text(v.rotation_plane) << '\n';
                print_projector(out, v.rotation_plane);
            } else {
                out << "plane 1: " << plane_text(v.plane1) << ", angle " << angle_text(v.angle1) << '\n';
                print_projector(out, v.plane1);
                out << "plane 2: " << plane_text(v.plane2) << ", angle " << angle_text(v.angle2) << '\n';
                print_projector(out, v.plane2);
            }
        },
        k);
}

std::string coarse_kind(const RotationKind& k) {
    if (std::holds_alternative<kind::LeftIsoclinic>(k) || std::holds_alternative<kind::RightIsoclinic>(k)) {
        return "Isoclinic";
    }
    return std::string(kind_name(k));
}

// (angle, plane) pairs from the formula side, ascending by angle.
struct AnglePlane {
    double angle;
    Plane plane;
};

std::vector<Rotation4> read_pair(const Options& opt, std::istream& in) {
    std::vector<Json> expanded;
    for (Json& v : read_inputs(opt, in)) {
        if (v.is_object() && v.contains("f") && v.contains("g")) {
            expanded.push_back(v["f"]);
            expanded.push_back(v["g"]);
        } else {
            expanded.push_back(std::move(v));
        }
    }
    const auto docs = collect_docs(expanded);
    if (docs.size() != 2) {
        throw CliError(kExitMalformed, "compose needs exactly two rotation documents (f, then g); got " +
                                           std::to_string(docs.size()));
    }
    return {to_rotation(docs[0], opt.normalize), to_rotation(docs[1], opt.normalize)};
}

}  // namespace

Json classification_json(const RotationKind& k) {
    Json j;
    j["kind"] = kind_name(k);
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, kind::Identity>) {
                j["angles"] = Json::array({0.0, 0.0});
                j["planes"] = Json::array();
            } else if constexpr (std::is_same_v<T, kind::LeftIsoclinic> || std::is_same_v<T, kind::RightIsoclinic>) {
                j["angles"] = Json::array({v.angle, v.angle});
                j["planes"] = Json::array();
            } else if constexpr (std::is_same_v<T, kind::Simple>) {
                j["angles"] = Json::array({v.angle, 0.0});
                j["planes"] = Json::array(
                    {plane_entry("rotation", v.rotation_plane, v.angle), plane_entry("fixed", v.fixed_plane, 0.0)});
            } else {
                j["angles"] = Json::array({v.angle1, v.angle2});
                j["planes"] = Json::array({plane_entry("plane1", v.plane1, v.angle1), plane_entry("plane2", v.plane2, v.angle2)});
            }
        },
        k);
    return j;
}

VerifyResult verify_rotation(const Rotation4& r, double eps) {
    VerifyResult res;
    const RotationKind k = classify(r, eps);
    res.formula_kind = coarse_kind(k);

    oracle::OraclePlanes op;
    try {
        op = oracle::planes_from_matrix(to_matrix(r), eps);
    } catch (const Error& e) {
        res.oracle_kind = "Unpaired";
        res.note = e.what();
        res.angle_discrepancy = std::numeric_limits<double>::infinity();
        return res;
    }
    if (op.isoclinic) {
        res.oracle_kind = op.angle1 <= eps ? "Identity" : "Isoclinic";
    } else {
        res.oracle_kind = op.angle1 <= eps ? "Simple" : "Double";
    }

    std::vector<AnglePlane> formula;
    double f_lo = 0.0;
    double f_hi = 0.0;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, kind::LeftIsoclinic> || std::is_same_v<T, kind::RightIsoclinic>) {
                f_lo = f_hi = v.angle;
            } else if constexpr (std::is_same_v<T, kind::Simple>) {
                formula = {{0.0, v.fixed_plane}, {v.angle, v.rotation_plane}};
            } else if constexpr (std::is_same_v<T, kind::Double>) {
                formula = {{v.angle1, v.plane1}, {v.angle2, v.plane2}};
            }
        },
        k);
    if (!formula.empty()) {
        std::sort(formula.begin(), formula.end(), [](const auto& l, const auto& r) { return l.angle < r.angle; });
        f_lo = formula[0].angle;
        f_hi = formula[1].angle;
    }
    res.angle_discrepancy = std::max(std::abs(f_lo - op.angle1), std::abs(f_hi - op.angle2));

    if (!formula.empty() && !op.isoclinic) {
        res.planes_compared = true;
        const double direct = std::max(projector_distance(formula[0].plane, op.plane1),
                                       projector_distance(formula[1].plane, op.plane2));
        if (std::abs(formula[0].angle - formula[1].angle) <= eps) {
            // Equal angles: the pairing of planes to angles carries no information.
            const double swapped = std::max(projector_distance(formula[0].plane, op.plane2),
                                            projector_distance(formula[1].plane, op.plane1));
            res.plane_discrepancy = std::min(direct, swapped);
        } else {
            res.plane_discrepancy = direct;
        }
    }
    res.consistent = res.formula_kind == res.oracle_kind && res.angle_discrepancy <= eps && res.plane_discrepancy <= eps;
    if (res.formula_kind != res.oracle_kind) res.note = "kind mismatch";
    return res;
}

int cmd_classify(const Options& opt, std::istream& in, std::ostream& out, std::ostream&) {
    const auto rotations = read_rotations(opt, in);
    for (std::size_t n = 0; n < rotations.size(); ++n) {
        const RotationKind k = classify(rotations[n], opt.eps);
        if (opt.json) {
            write_json(out, classification_json(k));
        } else {
            if (n > 0) out << '\n';
            print_classification(out, k);
        }
    }
    return kExitOk;
}

int cmd_compose(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto pair = read_pair(opt, in);
    const Rotation4& f = pair[0];
    const Rotation4& g = pair[1];
    const Rotation4 h = compose(g, f);

    Json result = to_json(to_doc(h));
    std::vector<std::string> human;

    if (opt.gibbs) {
        Json gj;
        try {
            const GibbsPair gh = compose_gibbs(GibbsPair::from_rotation(f), GibbsPair::from_rotation(g));
            gj["p_tilde"] = Json::array({gh.p_tilde.x1, gh.p_tilde.x2, gh.p_tilde.x3});
            gj["q_tilde"] = Json::array({gh.q_tilde.x1, gh.q_tilde.x2, gh.q_tilde.x3});
            gj["cos_alpha"] = gh.cos_alpha;
            gj["cos_beta"] = gh.cos_beta;
            human.push_back("gibbs: p~ = " + quaternion_text(Quaternion::pure(gh.p_tilde)) +
                            ", q~ = " + quaternion_text(Quaternion::pure(gh.q_tilde)) + ", cos alpha = " +
                            fmt6(gh.cos_alpha) + ", cos beta = " + fmt6(gh.cos_beta));
            try {
                const ComposedPlanes cp = composed_planes_from_gibbs(gh);
                gj["angles"] = Json::array({cp.angle1, cp.angle2});
                gj["planes"] = Json::array({plane_json(cp.plane1), plane_json(cp.plane2)});
                human.push_back("gibbs planes: " + plane_text(cp.plane1) + " at " + angle_text(cp.angle1) + "; " +
                                plane_text(cp.plane2) + " at " + angle_text(cp.angle2));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::DegenerateAxis) throw;
                human.push_back("gibbs planes: not unique (zero Gibbs vector)");
            }
        } catch (const Error& e) {
            if (e.code() != ErrorCode::GibbsSingular) throw;
            err << "warning: " << e.what() << "; the quaternion composition above is still valid\n";
            gj["singular"] = true;
            gj["reason"] = e.what();
            human.push_back("gibbs: singular chart (" + std::string(e.what()) + ")");
        }
        result["gibbs"] = gj;
    }

    if (opt.check_simple) {
        Json sj;
        try {
            const SimplicityReport rep = is_composition_simple(f, g, opt.eps);
            sj["s_condition"] = rep.s_condition;
            sj["det_normals"] = rep.det_normals;
            sj["intersection_dim"] = rep.intersection_dim;
            sj["is_simple"] = rep.is_simple;
            sj["det_says_simple"] = rep.det_says_simple;
            sj["intersection_says_simple"] = rep.intersection_says_simple;
            sj["tests_agree"] = rep.tests_agree();
            sj["composed_kind"] = kind_name(classify(h, opt.eps));
            human.push_back(std::string("simple composition: ") + (rep.is_simple ? "yes" : "no") +
                            " (Vc.Va - Vb.Vd = " + fmt6(rep.s_condition) + ", det[y,z,u,w] = " +
                            fmt6(rep.det_normals) + ", dim of fixed-plane intersection = " +
                            std::to_string(rep.intersection_dim) + ", tests " +
                            (rep.tests_agree() ? "agree" : "DISAGREE") + ")");
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotSimple) throw;
            err << "warning: --check-simple needs two simple rotations: " << e.what() << '\n';
            sj["applicable"] = false;
            sj["reason"] = e.what();
            human.push_back("simple composition: not applicable (an input is not simple)");
        }
        result["simplicity"] = sj;
    }

    if (opt.json) {
        write_json(out, result);
    } else {
        write_json(out, to_json(to_doc(h)));
        for (const auto& line : human) out << line << '\n';
    }
    return kExitOk;
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out, std::ostream&) {
    const auto rotations = read_rotations(opt, in);
    std::size_t passed = 0;
    double worst_angle = 0.0;
    double worst_plane = 0.0;
    const bool batch = rotations.size() > 1;
    for (const Rotation4& r : rotations) {
        const VerifyResult v = verify_rotation(r, opt.eps);
        passed += v.consistent ? 1 : 0;
        worst_angle = std::max(worst_angle, v.angle_discrepancy);
        worst_plane = std::max(worst_plane, v.plane_discrepancy);
        if (opt.json) {
            Json j;
            j["consistent"] = v.consistent;
            j["formula_kind"] = v.formula_kind;
            j["oracle_kind"] = v.oracle_kind;
            j["angle_discrepancy"] = v.angle_discrepancy;
            j["plane_discrepancy"] = v.plane_discrepancy;
            j["planes_compared"] = v.planes_compared;
            if (!v.note.empty()) j["note"] = v.note;
            write_json(out, j);
        } else if (!batch || !v.consistent) {
            out << (v.consistent ? "consistent" : "DISCREPANCY") << ": formula " << v.formula_kind << ", oracle "
                << v.oracle_kind << ", max angle diff " << fmt6(v.angle_discrepancy) << ", max projector diff "
                << (v.planes_compared ? fmt6(v.plane_discrepancy) : std::string("n/a (planes not unique)"))
                << (v.note.empty() ? "" : " [" + v.note + "]") << '\n';
        }
    }
    if (batch && !opt.json) {
        out << passed << "/" << rotations.size() << " consistent; worst angle diff " << fmt6(worst_angle)
            << ", worst projector diff " << fmt6(worst_plane) << '\n';
    }
    return passed == rotations.size() ? kExitOk : kExitDiscrepancy;
}

int cmd_random(const Options& opt, std::ostream& out) {
    Sampler sampler(opt.seed);
    for (int n = 0; n < opt.count; ++n) write_json(out, to_json(to_doc(sampler.rotation(opt.kind))));
    return kExitOk;
}

int cmd_reflections(const Options& opt, std::istream& in, std::ostream& out, std::ostream&) {
    for (const Rotation4& r : read_rotations(opt, in)) {
        std::pair<ReflectionNormal, ReflectionNormal> yz{ReflectionNormal{kOne}, ReflectionNormal{kOne}};
        try {
            yz = simple_to_reflections(r, opt.eps);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotSimple) throw;
            throw CliError(kExitMalformed, std::string("input is not a simple rotation: ") + e.what());
        }
        if (opt.json) {
            Json j;
            j["y"] = quaternion_json(yz.first.y());
            j["z"] = quaternion_json(yz.second.y());
            write_json(out, j);
        } else {
            out << "y = " << quaternion_text(yz.first.y()) << "\nz = " << quaternion_text(yz.second.y()) << '\n';
        }
    }
    return kExitOk;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rotations of E^4 as unit-quaternion pairs x -> a x b"};
    app.require_subcommand(1);
    Options opt;
    std::string kind_name_arg = "any";

    const auto add_common = [&](CLI::App* sub, bool eps, bool normalize) {
        if (eps) sub->add_option("--eps", opt.eps, "Tolerance for classification and checks")->capture_default_str();
        sub->add_flag("--json", opt.json, "Emit JSON");
        if (normalize) {
            sub->add_flag("--normalize", opt.normalize, "Rescale non-unit factors instead of rejecting them");
            sub->add_option("inputs", opt.inputs, "Input files (default: standard input)");
        }
    };

    auto* classify_cmd = app.add_subcommand("classify", "Classify a rotation and report its planes and angles");
    add_common(classify_cmd, true, true);

    auto* compose_cmd = app.add_subcommand("compose", "Compose f then g (inputs in that order)");
    add_common(compose_cmd, true, true);
    compose_cmd->add_flag("--gibbs", opt.gibbs, "Also report the composed Gibbs parameters");
    compose_cmd->add_flag("--check-simple", opt.check_simple, "Report whether g after f is simple");

    auto* verify_cmd = app.add_subcommand("verify", "Cross-check closed-form planes and angles against the matrix oracle");
    add_common(verify_cmd, true, true);

    auto* random_cmd = app.add_subcommand("random", "Emit seeded random rotation documents");
    random_cmd->add_option("--seed", opt.seed, "Generator seed")->capture_default_str();
    random_cmd->add_option("--kind", kind_name_arg, "any | simple | double | left-isoclinic | right-isoclinic")
        ->capture_default_str();
    random_cmd->add_option("--count", opt.count, "Number of documents")->check(CLI::PositiveNumber)->capture_default_str();
    random_cmd->add_flag("--json", opt.json, "Accepted for symmetry; output is always JSON");

    auto* reflections_cmd = app.add_subcommand("reflections", "Split a simple rotation into two reflections");
    add_common(reflections_cmd, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitMalformed;
    }

    try {
        if (*classify_cmd) return cmd_classify(opt, in, out, err);
        if (*compose_cmd) return cmd_compose(opt, in, out, err);
        if (*verify_cmd) return cmd_verify(opt, in, out, err);
        if (*reflections_cmd) return cmd_reflections(opt, in, out, err);
        if (*random_cmd) {
            const auto kind = parse_sample_kind(kind_name_arg);
            if (!kind) throw CliError(kExitMalformed, "unknown --kind: " + kind_name_arg);
            opt.kind = *kind;
            return cmd_random(opt, out);
        }
    } catch (const CliError& e) {
        err << "error: " << e.what() << '\n';
        return e.exit_code();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::NotUnit ? kExitNonUnit : kExitMalformed;
    }
    return kExitMalformed;
}

}  // namespace rot4::cli
