#include "sublat/suites.hpp"

#include <atomic>
#include <mutex>
#include <future>
#include <thread>

#include "sublat/beta.hpp"
#include "sublat/pgroup.hpp"

namespace sublat {

namespace {

void note(const ProgressFn& progress, const std::string& line) {
    if (progress) progress(line);
}

// Every type with exponent sum n, largest n first.
std::vector<PGroupType> types_of(const Int& p, unsigned n) {
    std::vector<PGroupType> out;
    for (const Partition& d : partitions_of(n)) out.emplace_back(p, d);
    return out;
}

}  // namespace

VerificationReport suite_congruence(const std::vector<Int>& ps, unsigned n_max,
                                    const ProgressFn& progress) {
    VerificationReport report;
    for (const Int& p : ps) {
        for (unsigned n = 1; n <= n_max; ++n) {
            note(progress, "congruence p=" + p.get_str() + " n=" + std::to_string(n));
            for (const PGroupType& t : types_of(p, n)) {
                bool ok = true;
                std::string detail;
                for (unsigned k = 1; k < n; ++k) {
                    if (s_k(t, k) % p != 1) {
                        ok = false;
                        detail = "s_" + std::to_string(k) + " != 1 (mod p)";
                        break;
                    }
                }
                report.checks.push_back({"congruence " + t.to_string(), ok, false, detail});
            }
        }
    }
    return report;
}

VerificationReport suite_congruence2(const std::vector<Int>& ps, unsigned n_max,
                                     const ProgressFn& progress) {
    VerificationReport report;
    for (const Int& p : ps) {
        if (p == 2) {
            report.checks.push_back({"congruence2 p=2", true, true, "skipped (odd primes only)"});
            continue;
        }
        Int p2 = p * p;
        for (unsigned n = 1; n <= n_max; ++n) {
            note(progress, "congruence2 p=" + p.get_str() + " n=" + std::to_string(n));
            for (const PGroupType& t : types_of(p, n)) {
                if (t.cyclic()) continue;
                bool ok = true;
                std::string detail;
                for (unsigned k = 1; k < n; ++k) {
                    if (s_k(t, k) % p2 != 1 + p) {
                        ok = false;
                        detail = "s_" + std::to_string(k) + " != 1+p (mod p^2)";
                        break;
                    }
                }
                report.checks.push_back({"congruence2 " + t.to_string(), ok, false, detail});
            }
        }
    }
    return report;
}

VerificationReport suite_duality(unsigned n_max, const ProgressFn& progress) {
    VerificationReport report;
    for (unsigned n = 1; n <= n_max; ++n) {
        note(progress, "duality n=" + std::to_string(n));
        for (const Partition& d : partitions_of(n)) {
            auto polys = subgroup_count_polys(d);
            bool ok = true;
            std::string detail;
            for (unsigned k = 0; k <= n / 2; ++k) {
                if (!(polys[k] == polys[n - k])) {
                    ok = false;
                    detail = "s_" + std::to_string(k) + " != s_" + std::to_string(n - k);
                    break;
                }
            }
            report.checks.push_back({"duality " + d.to_string(), ok, false, detail});
        }
    }
    return report;
}

VerificationReport suite_unimodal(unsigned n_max, const ProgressFn& progress) {
    VerificationReport report;
    for (unsigned n = 1; n <= n_max; ++n) {
        note(progress, "unimodal n=" + std::to_string(n));
        for (const Partition& d : partitions_of(n)) {
            auto polys = subgroup_count_polys(d);
            bool ok = true;
            std::string detail;
            for (unsigned k = 1; k <= n / 2; ++k) {
                if (!(polys[k] - polys[k - 1]).nonnegative_coefficients()) {
                    ok = false;
                    detail = "s_" + std::to_string(k) + " - s_" + std::to_string(k - 1) +
                             " has a negative coefficient";
                    break;
                }
            }
            report.checks.push_back({"unimodal " + d.to_string(), ok, false, detail});
        }
    }
    return report;
}

VerificationReport suite_rank2mono(const std::vector<Int>& ps, unsigned n_max,
                                   const ProgressFn& progress) {
    VerificationReport report;
    for (const Int& p : ps) {
        for (unsigned n = 4; n <= n_max; ++n) {
            note(progress, "rank2mono p=" + p.get_str() + " n=" + std::to_string(n));
            VerificationReport scan = rank2_monotone_scan(p, n);
            report.checks.insert(report.checks.end(), scan.checks.begin(), scan.checks.end());
        }
    }
    return report;
}

VerificationReport suite_secondmin(const std::vector<Int>& ps, unsigned n_max,
                                   const ProgressFn& progress) {
    VerificationReport report;
    for (const Int& p : ps) {
        for (unsigned n = 3; n <= n_max; ++n) {
            note(progress, "secondmin p=" + p.get_str() + " n=" + std::to_string(n));
            ClassificationReport c = second_min_check(p, n);
            std::string witness = "minimum " + rat_string(c.threshold) + " at {";
            for (std::size_t i = 0; i < c.extremal.size(); ++i)
                witness += (i ? ", " : "") + c.extremal[i];
            witness += "}; " + c.scope;
            report.checks.push_back({"secondmin p=" + p.get_str() + " n=" + std::to_string(n),
                                     c.pass, false, c.pass ? witness : c.detail + "; " + witness});
        }
    }
    return report;
}

VerificationReport suite_thirdmin(const std::vector<Int>& ps, unsigned n_max,
                                  const ProgressFn& progress) {
    VerificationReport report;
    for (const Int& p : ps) {
        if (p == 2) {
            report.checks.push_back({"thirdmin p=2", true, true, "skipped (odd primes only)"});
            continue;
        }
        for (unsigned n = 4; n <= n_max; ++n) {
            note(progress, "thirdmin p=" + p.get_str() + " n=" + std::to_string(n));
            ClassificationReport c = third_min_check(p, n);
            std::string witness = "minimum " + rat_string(c.threshold) + " at {";
            for (std::size_t i = 0; i < c.extremal.size(); ++i)
                witness += (i ? ", " : "") + c.extremal[i];
            witness += "}";
            report.checks.push_back({"thirdmin p=" + p.get_str() + " n=" + std::to_string(n),
                                     c.pass, false, c.pass ? witness : c.detail + "; " + witness});
        }
    }
    return report;
}

VerificationReport suite_hereditary(const std::vector<Int>& ps, unsigned n_max,
                                    const ProgressFn& progress) {
    VerificationReport report;
    for (const Int& p : ps) {
        for (unsigned n = 1; n <= n_max; ++n) {
            note(progress, "hereditary p=" + p.get_str() + " n=" + std::to_string(n));
            for (const PGroupType& t : types_of(p, n)) {
                bool exhaustive = hereditary_beta_le_one(t);
                bool classified = t.rank() <= 1 || (t.rank() == 2 && p >= 3) ||
                                  (t.rank() == 3 && p >= 5);
                bool ok = exhaustive == classified;
                report.checks.push_back({"hereditary " + t.to_string(), ok, false,
                                         ok ? "" : "exhaustive sweep disagrees with the rank/prime classification"});
            }
        }
    }
    return report;
}

VerificationReport suite_image(const std::vector<Int>& ps, unsigned n_max,
                               const ProgressFn& progress) {
    VerificationReport report;
    for (const Int& p : ps) {
        for (unsigned n = 1; n <= n_max; ++n) {
            note(progress, "image p=" + p.get_str() + " n=" + std::to_string(n));
            for (const PGroupType& t : types_of(p, n)) {
                std::size_t size = beta_image_size(t);
                const Partition& d = t.type();
                bool expect1 = p == 2 && d == Partition{1};
                bool expect2 = (p != 2 && d == Partition{1}) ||
                               (p == 3 && d == Partition{1, 1}) ||
                               (p == 2 && d == Partition{2}) ||
                               (p == 2 && d == Partition{1, 1});
                bool ok = (size == 1) == expect1 && (size == 2) == expect2;
                report.checks.push_back({"image " + t.to_string(), ok, false,
                                         ok ? "" : "|Im beta| = " + std::to_string(size)});
            }
        }
    }
    return report;
}

VerificationReport suite_frattini(const std::vector<Int>& ps, unsigned n_max,
                                  const ProgressFn& progress) {
    VerificationReport report;
    for (const Int& p : ps) {
        for (unsigned n = 1; n <= n_max; ++n) {
            note(progress, "frattini p=" + p.get_str() + " n=" + std::to_string(n));
            for (const PGroupType& t : types_of(p, n)) {
                Int expected = (int_pow(p, t.rank()) - 1) / (p - 1);
                Int actual = s_k(t, n - 1);
                bool ok = actual == expected;
                report.checks.push_back({"frattini " + t.to_string(), ok, false,
                                         ok ? "" : "s_{n-1} = " + actual.get_str() +
                                                       ", expected " + expected.get_str()});
            }
        }
    }
    return report;
}

VerificationReport suite_oracle(const std::vector<Int>& ps, const OracleLimits& limits,
                                unsigned threads, const ProgressFn& progress) {
    std::vector<PGroupType> targets;
    for (const Int& p : ps) {
        for (unsigned n = 1; int_pow(p, n) <= limits.max_order; ++n)
            for (const Partition& d : partitions_of(n)) targets.emplace_back(p, d);
    }

    std::vector<VerificationReport> partial(targets.size());
    std::atomic<std::size_t> cursor{0};
    std::mutex progress_mutex;
    auto worker = [&]() {
        for (std::size_t i = cursor.fetch_add(1); i < targets.size(); i = cursor.fetch_add(1)) {
            const PGroupType& t = targets[i];
            Int predicted = lattice_size(t);
            if (predicted > Int(static_cast<unsigned long>(limits.max_subgroups))) {
                partial[i].checks.push_back({"oracle " + t.to_string(), true, true,
                                             "skipped: predicted " + predicted.get_str() +
                                                 " subgroups exceeds cap " +
                                                 std::to_string(limits.max_subgroups)});
                continue;
            }
            if (progress) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                progress("oracle " + t.to_string() + " (" + predicted.get_str() + " subgroups)");
            }
            VerificationReport check = oracle_check(t, limits);
            bool ok = check.all_pass();
            std::string detail;
            if (!ok) {
                for (const CheckResult& c : check.failures())
                    detail += (detail.empty() ? "" : "; ") + c.name + ": " + c.detail;
            }
            partial[i].checks.push_back({"oracle " + t.to_string() + " |L|=" + predicted.get_str(),
                                         ok, false, detail});
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    VerificationReport report;
    for (const VerificationReport& r : partial)
        report.checks.insert(report.checks.end(), r.checks.begin(), r.checks.end());
    return report;
}

}  // namespace sublat
