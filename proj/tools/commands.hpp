#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace indcx::cli {

enum class Format { Tsv, Json };

struct Budgets {
    std::size_t faces = 2'000'000;  // materialized complexes
    int brute = 26;                 // vertices for explicit enumeration
    std::size_t dim = 5000;         // transfer matrix states
    int series = 40;                // generating function terms
    std::size_t enumerate = 0;      // class enumeration in the residual table
    int jobs = 1;
};

struct Context {
    Budgets budgets;
    Format format = Format::Tsv;
    std::ostream* out = nullptr;
    std::ostream* err = nullptr;
};

// "1-11", "2-24:2", "3,5,7", "4".
std::vector<int> parse_range(const std::string& s);
// "1,2,4" as 1-based rows; "" or "-" is the empty set.
std::vector<int> parse_rows(const std::string& s);

// Runs fn(0..count-1) on a shared work queue.
void run_cells(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

// Every command returns the process exit code.
int cmd_partition(const Context& cx, const std::string& family, const std::vector<int>& ms,
                  const std::vector<int>& ns, const std::string& method, bool check);
int cmd_homology(const Context& cx, const std::string& family, const std::vector<int>& ms, const std::vector<int>& ns);
int cmd_charpoly(const Context& cx, const std::string& family, int m);
int cmd_morse(const Context& cx, const std::string& family, int m, int n);
int cmd_genfun(const Context& cx, int m, const std::vector<int>& A, const std::vector<int>& B, int terms, bool trace,
               bool fit);
int cmd_verify(const Context& cx, const std::string& suite);
int cmd_reproduce(const Context& cx, int table);

}  // namespace indcx::cli
