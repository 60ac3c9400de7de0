#pragma once

#include <atomic>
#include <chrono>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hamcount/composition.hpp"
#include "hamcount/exact.hpp"

namespace hamcount::table {

enum class Quantity { S, H };
enum class Format { Text, Csv, Json };

struct TableRequest {
    Quantity quantity = Quantity::S;
    int m_lo = 1, m_hi = 5;
    int n_lo = 1, n_hi = 7;
    Format format = Format::Text;
    double budget_seconds = 300.0;
    unsigned workers = 0;  // 0 = hardware concurrency
    Strategy strategy = Strategy::Auto;
};

struct TableResult {
    // grid[i][j] for m = m_lo+i, n = n_lo+j; empty optional = not computed
    std::vector<std::vector<std::optional<std::string>>> grid;
    bool complete = true;
};

inline Count cell_value(Quantity q, int m, int n, Strategy strategy) {
    Composition c(std::vector<int>(static_cast<size_t>(m), n));
    return q == Quantity::S ? s_count(c, strategy) : hamiltonian_cycles(c, strategy);
}

// Independent (m, n) cells fan out to a worker pool; cells not started
// before the budget expires are left blank.
inline TableResult generate(const TableRequest& req) {
    const int rows = req.m_hi - req.m_lo + 1;
    const int cols = req.n_hi - req.n_lo + 1;
    TableResult result;
    result.grid.assign(static_cast<size_t>(rows),
                       std::vector<std::optional<std::string>>(static_cast<size_t>(cols)));

    unsigned workers = req.workers ? req.workers : std::max(1u, std::thread::hardware_concurrency());
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(req.budget_seconds));
    std::atomic<int> next{0};
    std::atomic<bool> timed_out{false};

    auto worker = [&] {
        for (;;) {
            int idx = next.fetch_add(1);
            if (idx >= rows * cols) return;
            if (std::chrono::steady_clock::now() >= deadline) {
                timed_out = true;
                return;
            }
            int i = idx / cols, j = idx % cols;
            Count v = cell_value(req.quantity, req.m_lo + i, req.n_lo + j, req.strategy);
            result.grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = v.str();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    result.complete = !timed_out;
    return result;
}

}  // namespace hamcount::table
