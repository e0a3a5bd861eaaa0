#pragma once

// Named checks reproducing the dimension claims about the model flop, each
// returning its computed evidence.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "flopcalc/flop.hpp"
#include "flopcalc/serialize.hpp"

namespace flopcalc::verify {

enum class Status { Pass, Fail, Underdetermined };

std::string to_string(Status status);

struct CheckResult {
    std::string id;
    int n = 0;
    Status status = Status::Pass;
    Json evidence = Json::object();
    // Concrete failing coordinates; non-empty whenever status is Fail.
    std::vector<Json> counterexamples;

    Json to_json() const;
};

CheckResult verify_lemma_1_3(int n);
CheckResult verify_lemma_1_3(int n, const flop::PicMap& map);
CheckResult verify_lemma_1_6(int n);
CheckResult verify_lemma_2_1();
CheckResult verify_cor_2_2();
CheckResult verify_lemma_2_3(int n);
CheckResult verify_lemma_3_4(int n);
CheckResult verify_prop_3_5(int n);
CheckResult verify_serre_3_6(int n);
CheckResult verify_serre_3_6(int n, const flop::PicMap& map);

struct CheckSpec {
    std::string id;
    std::optional<int> fixed_n;  // checks stated for a single n
    std::function<CheckResult(int)> run;
};

// Sorted by id.
const std::vector<CheckSpec>& check_registry();
const CheckSpec& find_check(const std::string& id);  // throws InvalidArgument

// Runs one check at one n. Checks with a fixed n reject any other n.
CheckResult run_check(const std::string& id, int n);

struct Report {
    std::vector<CheckResult> results;  // sorted by (id, n)

    // 0 all pass, 1 any failure, 3 underdetermined without failure.
    int exit_code() const;
    Json to_json() const;
    std::string to_text() const;
    std::string to_markdown() const;
};

// Every registered check for n = 2..max_n (fixed-n checks once). Suites run
// concurrently when `parallel` is set; the merged order does not depend on it.
Report run_all(int max_n, bool parallel = true);
Report run_checks(const std::vector<std::string>& ids, int min_n, int max_n, bool parallel = true);

}  // namespace flopcalc::verify
