#include "CLI11.hpp"
#include "golden_suite.hpp"
#include "json.hpp"
#include "symchar/char_bases.hpp"
#include "symchar/classical.hpp"
#include "symchar/expression.hpp"
#include "symchar/table_io.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using nlohmann::json;
using namespace symchar;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;   // parse / validation errors
constexpr int kExitGolden = 3;  // golden-suite failure

json partitionJson(const Partition& p) {
    json a = json::array();
    for (int i = 0; i < p.length(); ++i) a.push_back(p.part(i));
    return a;
}

json termsJson(const SymFunc& f) {
    json a = json::array();
    for (const auto& [idx, c] : f.terms())
        a.push_back({{"partition", partitionJson(idx)}, {"coefficient", c.toString()}});
    return a;
}

void printExpansion(const SymFunc& f, const std::string& command, const std::string& format) {
    if (format == "json") {
        json out = {{"command", command},
                    {"basis", std::string(basis_code(f.basis()))},
                    {"terms", termsJson(f)}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << render_lines(f);
    }
}

BasisTag parseBasisOrThrow(const std::string& code) {
    auto tag = basis_from_code(code);
    if (!tag) throw std::invalid_argument("unknown basis '" + code + "'");
    return *tag;
}

// accepts "3,1", "[3,1]", "-" or "[]" for the empty partition
Partition parsePartitionArg(std::string text) {
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']')
        text = text.substr(1, text.size() - 2);
    if (text.empty()) return Partition();
    return parse_partition_token(text);
}

SymFunc kroneckerAnyBasis(const SymFunc& f, const SymFunc& g) {
    if (is_classical(f.basis()) && is_classical(g.basis())) return kronecker_product(f, g);
    SymFunc pa = convert_char_basis(f, BasisTag::Power);
    SymFunc pb = convert_char_basis(g, BasisTag::Power);
    return convert_char_basis(kronecker_product(pa, pb), f.basis());
}

int runGolden(const std::string& caseFilter, bool perturb, const std::string& format) {
    if (!caseFilter.empty()) {
        bool known = false;
        for (const auto& name : golden::case_names()) known = known || name == caseFilter;
        if (!known) {
            std::cerr << "error: unknown golden case '" << caseFilter << "'\n";
            return kExitUsage;
        }
    }
    auto results = golden::run(caseFilter, perturb);
    bool allPassed = true;
    json cases = json::array();
    int passed = 0;
    for (const auto& r : results) {
        allPassed = allPassed && r.passed;
        passed += r.passed ? 1 : 0;
        if (format == "json") {
            cases.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        } else {
            std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "\n";
            if (!r.passed) std::cout << "  " << r.detail << "\n";
        }
    }
    if (format == "json") {
        json out = {{"command", "golden"},
                    {"passed", allPassed},
                    {"total", results.size()},
                    {"cases", cases}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << passed << "/" << results.size() << " cases passed\n";
    }
    return allPassed ? kExitOk : kExitGolden;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symchar: exact symmetric functions and symmetric group character bases"};
    app.require_subcommand(1);

    std::string format = "text";
    int maxDegree = 16;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--max-degree", maxDegree,
                   "reject computations materializing indices above this size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* cmdConvert = app.add_subcommand("convert", "expand an expression in a target basis");
    std::string convertTo, convertExpr;
    cmdConvert->add_option("--to", convertTo, "target basis (p h e s m ht st)")->required();
    cmdConvert->add_option("expression", convertExpr, "expression to convert")->required();

    auto* cmdEval = app.add_subcommand(
        "eval", "evaluate at the eigenvalues of a permutation matrix of the given cycle type");
    std::string evalCycleType, evalExpr;
    cmdEval->add_option("--cycle-type", evalCycleType, "cycle type, e.g. 3,3,2,2,1")->required();
    cmdEval->add_option("expression", evalExpr, "expression to evaluate")->required();

    auto* cmdFrobenius =
        app.add_subcommand("frobenius", "Frobenius image of the class function at a given n");
    int frobeniusN = 0;
    std::string frobeniusTo = "p", frobeniusExpr;
    cmdFrobenius->add_option("-n,--degree", frobeniusN, "symmetric group size n")
        ->required()
        ->check(CLI::PositiveNumber);
    cmdFrobenius->add_option("--to", frobeniusTo, "basis for the result")
        ->capture_default_str();
    cmdFrobenius->add_option("expression", frobeniusExpr, "expression to map")->required();

    auto* cmdProduct = app.add_subcommand("product", "multiply two expressions");
    std::string productKind = "outer", productTo, productLhs, productRhs;
    cmdProduct->add_option("--kind", productKind, "outer, kron, or char")
        ->check(CLI::IsMember({"outer", "kron", "char"}))
        ->capture_default_str();
    cmdProduct->add_option("--to", productTo, "convert the result to this basis");
    cmdProduct->add_option("lhs", productLhs, "left factor")->required();
    cmdProduct->add_option("rhs", productRhs, "right factor")->required();

    auto* cmdCharpoly =
        app.add_subcommand("charpoly", "character polynomial of the padded shape (n-|la|, la)");
    std::string charpolyPartition;
    cmdCharpoly->add_option("partition", charpolyPartition, "partition, e.g. 3 or 2,1 or []")
        ->required();

    auto* cmdGolden = app.add_subcommand("golden", "run the built-in verified example suite");
    std::string goldenCase;
    bool goldenPerturb = false;
    cmdGolden->add_option("--case", goldenCase, "run a single named case");
    cmdGolden->add_flag("--perturb", goldenPerturb,
                        "corrupt every computed value first (harness self-test)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const char* cacheDir = std::getenv("SYMCHAR_CACHE_DIR");
    if (cacheDir && *cacheDir) {
        try {
            load_tables(cacheDir);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
    }

    EvalOptions opts;
    opts.maxDegree = maxDegree;
    int exitCode = kExitOk;

    try {
        if (cmdConvert->parsed()) {
            BasisTag target = parseBasisOrThrow(convertTo);
            SymFunc f = parse_expression(convertExpr, opts);
            check_conversion_degree(f, target, opts);
            printExpansion(convert_char_basis(f, target), "convert", format);
        } else if (cmdEval->parsed()) {
            Partition mu = parsePartitionArg(evalCycleType);
            SymFunc f = parse_expression(evalExpr, opts);
            check_conversion_degree(f, BasisTag::Power, opts);
            Rational value = eval_at_permutation_roots(f, mu);
            if (format == "json")
                std::cout << json{{"command", "eval"}, {"value", value.toString()}}.dump()
                          << "\n";
            else
                std::cout << value.toString() << "\n";
        } else if (cmdFrobenius->parsed()) {
            BasisTag target = parseBasisOrThrow(frobeniusTo);
            SymFunc f = parse_expression(frobeniusExpr, opts);
            if (frobeniusN > opts.maxDegree)
                throw std::invalid_argument("-n exceeds the --max-degree limit");
            check_conversion_degree(f, BasisTag::Power, opts);
            SymFunc img = frobenius_image(f, frobeniusN);
            check_conversion_degree(img, target, opts);
            printExpansion(convert_char_basis(img, target), "frobenius", format);
        } else if (cmdProduct->parsed()) {
            SymFunc lhs = parse_expression(productLhs, opts);
            SymFunc rhs = parse_expression(productRhs, opts);
            int bound = lhs.maxIndexSize() + rhs.maxIndexSize();
            bool anyChar = is_character(lhs.basis()) || is_character(rhs.basis());
            if (productKind == "char" || anyChar) bound *= 2;
            if (bound > opts.maxDegree)
                throw std::invalid_argument(
                    "product degree exceeds the --max-degree limit of " +
                    std::to_string(opts.maxDegree));
            SymFunc result(lhs.basis());
            if (productKind == "outer") {
                result = ring_product(lhs, rhs);
            } else if (productKind == "kron") {
                result = kroneckerAnyBasis(lhs, rhs);
            } else {
                SymFunc a = is_character(lhs.basis()) ? lhs
                                                      : convert_char_basis(lhs, BasisTag::HTilde);
                SymFunc b = is_character(rhs.basis()) ? rhs
                                                      : convert_char_basis(rhs, BasisTag::HTilde);
                result = character_product(a, b);
            }
            if (!productTo.empty()) {
                BasisTag target = parseBasisOrThrow(productTo);
                check_conversion_degree(result, target, opts);
                result = convert_char_basis(result, target);
            }
            printExpansion(result, "product", format);
        } else if (cmdCharpoly->parsed()) {
            Partition la = parsePartitionArg(charpolyPartition);
            if (2 * la.size() > opts.maxDegree)
                throw std::invalid_argument("partition exceeds the --max-degree limit");
            CyclePolynomial q = character_polynomial(la);
            if (format == "json") {
                json terms = json::array();
                for (const auto& [expo, c] : q.terms())
                    terms.push_back({{"exponents", expo}, {"coefficient", c.toString()}});
                std::cout << json{{"command", "charpoly"}, {"terms", terms}}.dump() << "\n";
            } else {
                std::cout << q.toString() << "\n";
            }
        } else if (cmdGolden->parsed()) {
            exitCode = runGolden(goldenCase, goldenPerturb, format);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (cacheDir && *cacheDir && exitCode == kExitOk) {
        try {
            save_tables(cacheDir);
        } catch (const std::exception& e) {
            std::cerr << "warning: could not save table cache: " << e.what() << "\n";
        }
    }
    return exitCode;
}
