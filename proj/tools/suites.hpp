#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sodlab::cli {

struct Check {
    std::string name;
    std::string status;  // pass, fail, inconclusive
    std::string detail;
};

struct Task {
    std::string name;
    std::function<std::vector<Check>()> run;
};

struct VerifyOptions {
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> d;
    std::optional<int> cutoff;
    std::optional<int> maxRank;
    unsigned long long seed = 0;
};

const std::vector<std::string>& suite_names();

/* throws std::invalid_argument for parameters outside the supported range */
std::vector<Task> build_tasks(const std::string& suite, const VerifyOptions& opts);

/* runs the tasks on `jobs` threads; results keep task order */
std::vector<Check> run_tasks(const std::vector<Task>& tasks, int jobs);

/* 1 if any check failed, else 0; inconclusive checks do not fail */
int exit_status(const std::vector<Check>& checks);

} // namespace sodlab::cli
