#pragma once

#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "gdet/context.hpp"
#include "gdet/group_algebra.hpp"

namespace gdet {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

/// How a checker establishes equality: full symbolic expansion, or exact
/// evaluation at `trials` pseudo-random integer assignments drawn from
/// [-bound, bound] (bound 0 means the default 10 * |G|).
struct CheckMode {
    bool symbolic = true;
    long trials = 20;
    unsigned long long seed = 0;
    long bound = 0;

    static CheckMode make_symbolic() { return CheckMode{true, 20, 0, 0}; }
    static CheckMode make_randomized(long trials, unsigned long long seed, long bound = 0) {
        return CheckMode{false, trials, seed, bound};
    }
    /// Symbolic up to the detlab size limit, randomized above it.
    static CheckMode auto_for(const FiniteGroup& g, unsigned long long seed = 0, long trials = 20);
};

struct CheckResult {
    std::string id;
    std::string group;
    std::string mode;
    CheckStatus status = CheckStatus::Pass;
    std::string reason;        // skip reason or failing claim label
    nlohmann::json witness;    // counterexample assignment / offending coefficient
    nlohmann::json details;    // recorded side outcomes

    bool passed() const { return status == CheckStatus::Pass; }
    bool failed() const { return status == CheckStatus::Fail; }
};

nlohmann::json to_json(const CheckResult& r);

enum class Applicability { Applicable, Skip, WrongFamily };

struct CheckInfo {
    std::string id;
    Applicability applicability;
    std::string reason;    // empty when applicable
};

/// Every check id, in the fixed reporting order.
const std::vector<std::string>& all_check_ids();

/// Applicability of every checker for the given group.
std::vector<CheckInfo> list_checks(const Context& ctx);

/// Runs one checker. Unknown ids and family mismatches throw
/// std::invalid_argument / std::domain_error; structurally undefined cases
/// (alpha3/alpha4 on D_m with m odd) come back as Skipped.
CheckResult run_check(const std::string& id, const Context& ctx, const CheckMode& mode);

/// Runs every checker in order, recording Skipped entries where inapplicable.
std::vector<CheckResult> run_all_checks(const Context& ctx, const CheckMode& mode);

/// Deterministic stream of integer assignments in [-bound, bound], one value
/// per group element. The same seed always yields the same stream.
class AssignmentStream {
public:
    AssignmentStream(unsigned long long seed, long bound);
    std::vector<CycloNumber> next(const Context& ctx);

private:
    std::mt19937_64 rng_;
    long bound_;
};

std::vector<CycloNumber> random_assignment(const Context& ctx, unsigned long long seed, long bound);

nlohmann::json assignment_to_json(const Context& ctx, const std::vector<CycloNumber>& assign);

/// Array-of-terms form: [{"coeff": "...", "monomial": [[var-name, exp], ...]}, ...]
/// in descending monomial order.
nlohmann::json poly_to_json(const Poly& p, const VarNamer& namer);

/// {"group": "...", "coeffs": [{"element": "...", "poly": [...]}, ...]} with
/// zero coefficients omitted.
nlohmann::json element_to_json(const AlgebraElement& u);

}  // namespace gdet
