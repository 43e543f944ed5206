#include "tcorr/lemma_check.hpp"

#include <random>

namespace tcorr {

namespace {

template <typename PairCheck>
void run_pairs(IdentityCheck& check, std::uint32_t size, std::uint64_t limit, std::uint64_t samples,
               bool sample_z_rows, std::mt19937_64& rng, PairCheck&& ok)
{
    const std::uint64_t pairs = static_cast<std::uint64_t>(size) * size;
    std::uniform_int_distribution<std::uint32_t> pick(0, size - 1);
    if (pairs <= limit) {
        check.exhaustive = true;
        for (std::uint32_t z = 0; z < size; ++z)
            for (std::uint32_t x = 0; x < size; ++x)
                check.failures += ok(z, x) ? 0 : 1;
        check.checked = pairs;
    } else if (sample_z_rows) {
        for (std::uint64_t i = 0; i < samples; ++i) {
            const std::uint32_t z = pick(rng);
            for (std::uint32_t x = 0; x < size; ++x)
                check.failures += ok(z, x) ? 0 : 1;
        }
        check.checked = samples * size;
    } else {
        for (std::uint64_t i = 0; i < samples; ++i) {
            const std::uint32_t z = pick(rng);
            const std::uint32_t x = pick(rng);
            check.failures += ok(z, x) ? 0 : 1;
        }
        check.checked = samples;
    }
}

}  // namespace

std::vector<IdentityCheck> check_trace_identities(const TowerCtx& tower, const LemmaCheckOptions& opts)
{
    const LogTables& t = tower.tables();
    const std::uint32_t size = tower.size();
    std::mt19937_64 rng(opts.seed);
    std::vector<IdentityCheck> out;

    IdentityCheck rel_xd{"rel_trace_xd"};
    if (tower.decimation_case() == DecimationCase::A) {
        rel_xd.exhaustive = true;
        for (std::uint32_t x = 0; x < size; ++x) {
            const std::uint32_t direct = tower.rel_trace(t.pow(x, tower.d())).index();
            rel_xd.failures += rel_trace_xd(tower, tower.unpack(x)) == direct ? 0 : 1;
        }
        rel_xd.checked = size;
    } else {
        rel_xd.supported = false;
    }
    out.push_back(rel_xd);

    IdentityCheck rel_zx{"rel_trace_zx"};
    run_pairs(rel_zx, size, opts.rel_pair_limit, opts.rel_samples, false, rng,
              [&](std::uint32_t z, std::uint32_t x) {
                  return rel_trace_zx(tower, tower.unpack(z), tower.unpack(x)) ==
                         tower.rel_trace(t.mul(z, x)).index();
              });
    out.push_back(rel_zx);

    IdentityCheck abs_xd{"abs_trace_xd"};
    abs_xd.exhaustive = true;
    for (std::uint32_t x = 0; x < size; ++x)
        abs_xd.failures += abs_trace_xd(tower, tower.unpack(x)) == t.trace[t.pow(x, tower.d())] ? 0 : 1;
    abs_xd.checked = size;
    out.push_back(abs_xd);

    IdentityCheck abs_zx{"abs_trace_zx"};
    run_pairs(abs_zx, size, opts.abs_pair_limit, opts.abs_z_samples, true, rng,
              [&](std::uint32_t z, std::uint32_t x) {
                  return abs_trace_zx(tower, tower.unpack(z), tower.unpack(x)) == t.trace[t.mul(z, x)];
              });
    out.push_back(abs_zx);
    return out;
}

}  // namespace tcorr
