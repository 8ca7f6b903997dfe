// Command-line front end: enumeration, construction, verification, and the
// D4 table, with deterministic machine-readable output.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "finegrading/report.hpp"

using namespace fgr;

namespace {

std::vector<EmittedGrading> run_family(const std::string& family, long n, bool pre_merge,
                                       long max_n) {
    PipelineOptions opts;
    opts.max_n = max_n;
    if (family == "sl") return fine_gradings_sl(n, opts);
    if (family == "sp") return fine_gradings_sp(n, opts);
    if (family == "so") return fine_gradings_so(n, opts, pre_merge);
    throw CLI::ValidationError("--family", "unknown family " + family);
}

void write_out(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    os << text;
}

void emit_bases(const std::vector<EmittedGrading>& rows, const std::string& dir,
                const std::string& family, long n) {
    std::filesystem::create_directories(dir);
    for (size_t i = 0; i < rows.size(); ++i) {
        std::ostringstream name;
        name << dir << "/" << family << n << "_" << std::setw(2) << std::setfill('0') << i
             << ".txt";
        std::ofstream os(name.str());
        os << "provenance " << rows[i].report.provenance << "\n";
        os << grading_bases_dump(rows[i].grading);
    }
}

int selftest() {
    long failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << what << "\n";
        if (!ok) ++failures;
    };

    std::mt19937 rng(97);
    std::uniform_int_distribution<int> v(-3, 3);
    auto rand_oct = [&] {
        CycMatrix x(8, 1);
        for (int i = 0; i < 8; ++i) x.at(i, 0) = CycNum(v(rng));
        return x;
    };
    bool mult = true, conj_anti = true, norm_id = true;
    for (int it = 0; it < 50; ++it) {
        CycMatrix x = rand_oct(), y = rand_oct();
        if (oct_norm(oct_mul(x, y)) != oct_norm(x) * oct_norm(y)) mult = false;
        if (oct_conj(oct_mul(x, y)) != oct_mul(oct_conj(y), oct_conj(x))) conj_anti = false;
        if (oct_mul(x, oct_conj(x)) != oct_unit().scaled(oct_norm(x))) norm_id = false;
    }
    check(mult, "octonion norm is multiplicative");
    check(conj_anti, "octonion conjugation is an antiautomorphism");
    check(norm_id, "x conj(x) = q(x) 1");

    auto h = cartan_h();
    Rational half(1, 2);
    check(theta_apply(h[0]) == (-h[0] - h[1] - h[2] - h[3]).scaled(CycNum(half)),
          "theta(h0) = (-h0-h1-h2-h3)/2");
    check(theta_apply(h[1]) == (h[0] + h[1] - h[2] - h[3]).scaled(CycNum(half)),
          "theta(h1) = (h0+h1-h2-h3)/2");
    check(theta_matrix() * theta_matrix() * theta_matrix() == CycMatrix::identity(28),
          "theta^3 = id");
    bool fixes = true;
    for (const auto& d : derivation_basis())
        if (theta_apply(d) != d) fixes = false;
    check(derivation_basis().size() == 14 && fixes, "theta fixes the 14-dim derivation algebra");

    const AutPhi& g = autphi_group();
    check(g.weyl.size() == 192, "|W| = 192");
    check(g.full.size() == 1152, "|Aut Phi| = 1152");
    bool no9 = true;
    for (const auto& m : g.full)
        if (element_order(m) == 9) no9 = false;
    check(no9, "no elements of order 9");
    check(order3_classes().size() == 3, "three conjugacy classes of order-3 elements");
    check(phi_partition_count() == 1 && phi_partition_stated_valid(),
          "unique orthogonal root partition");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fine gradings of the classical simple Lie algebras (exact arithmetic)"};
    app.require_subcommand(1);

    std::string family = "sl", format = "json", output, bases_dir;
    long n = 8;
    long max_n = 16;
    bool pre_merge = false;
    long index = -1;

    auto add_common = [&](CLI::App* cmd, bool with_family) {
        if (with_family) {
            cmd->add_option("--family", family, "algebra family: sl, so, sp")->required();
            cmd->add_option("--n", n, "matrix size n")->required();
            cmd->add_flag("--pre-merge", pre_merge,
                          "so8 only: list the 15 matrix-level classes before the triality merge");
            cmd->add_option("--max-n", max_n, "combinatorial safety bound (default 16)");
        }
        cmd->add_option("--format", format, "output format: json or table")
            ->check(CLI::IsMember({"json", "table"}));
        cmd->add_option("--output", output, "write to a file instead of stdout");
    };

    auto* enumerate = app.add_subcommand("enumerate", "classify the fine gradings of one algebra");
    add_common(enumerate, true);
    enumerate->add_option("--emit-bases", bases_dir, "dump exact component bases per grading");

    auto* construct = app.add_subcommand("construct", "construct one grading by class index");
    add_common(construct, true);
    construct->add_option("--index", index, "class index (0-based, report order)")->required();
    construct->add_option("--emit-bases", bases_dir, "dump the exact component bases");

    auto* verify = app.add_subcommand("verify", "verify every constructed grading of one algebra");
    add_common(verify, true);

    auto* d4 = app.add_subcommand("d4-table", "the 17-row so8 fine-grading table");
    add_common(d4, false);

    app.add_subcommand("selftest", "octonion, triality and root-system identity suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) {
            auto rows = run_family(family, n, pre_merge, max_n);
            write_out(format == "json" ? reports_to_json(family, n, rows)
                                       : reports_to_table(family, n, rows),
                      output);
            if (!bases_dir.empty()) emit_bases(rows, bases_dir, family, n);
            return 0;
        }
        if (construct->parsed()) {
            auto rows = run_family(family, n, pre_merge, max_n);
            if (index < 0 || index >= long(rows.size()))
                throw std::runtime_error("construct: index out of range (have " +
                                         std::to_string(rows.size()) + " classes)");
            std::vector<EmittedGrading> one;
            one.push_back(rows[size_t(index)]);
            write_out(format == "json" ? reports_to_json(family, n, one)
                                       : reports_to_table(family, n, one),
                      output);
            if (!bases_dir.empty()) emit_bases(one, bases_dir, family, n);
            return 0;
        }
        if (verify->parsed()) {
            auto rows = run_family(family, n, pre_merge, max_n);
            for (const auto& r : rows) {
                auto violations = verify_lie(r.grading);
                long sum = 0;
                for (size_t i = 0; i < r.report.type.size(); ++i)
                    sum += long(i + 1) * r.report.type[i];
                if (sum != r.grading.span().expected_dim(r.grading.n()))
                    violations.push_back({"type-sum identity violated"});
                if (!violations.empty()) {
                    std::cout << "FAIL " << r.report.provenance << "\n";
                    for (const auto& v : violations) std::cout << "  " << v.what << "\n";
                    return 1;
                }
                std::cout << "ok   " << r.report.provenance << "\n";
            }
            return 0;
        }
        if (d4->parsed()) {
            auto rows = d4_table();
            write_out(format == "json" ? d4_to_json(rows) : d4_to_table(rows), output);
            return 0;
        }
        return selftest();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
