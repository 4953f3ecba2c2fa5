#include "sstar/analysis.hpp"

#include <algorithm>
#include <iterator>
#include <map>

namespace sstar {

Rational jaccard(const std::set<Point>& a, const std::set<Point>& b) {
    if (a.empty() && b.empty()) return 1;
    std::size_t inter = 0;
    for (const auto& p : a) inter += b.count(p);
    std::size_t uni = a.size() + b.size() - inter;
    return Rational(inter, uni);
}

ValidityReport hypothesis_validity(const Model& truth, const Model& guess,
                                   const DiscreteDomain& domain,
                                   const std::vector<std::vector<OutputValue>>& blocks,
                                   std::uint64_t budget) {
    if (blocks.empty())
        fail(ErrorCode::empty_blocks, "block partition of the range is empty");

    auto points = enumerate_points(domain, budget);
    std::map<OutputValue, std::set<Point>> true_fibers, guess_fibers;
    for (const auto& p : points) {
        true_fibers[truth.eval(p)].insert(p);
        guess_fibers[guess.eval(p)].insert(p);
    }

    ValidityReport report;
    Rational total = 0;
    for (const auto& block : blocks) {
        BlockValidity bv;
        bv.block = block;
        for (const auto& v : block) {
            if (auto it = true_fibers.find(v); it != true_fibers.end())
                bv.true_preimage.insert(it->second.begin(), it->second.end());
            if (auto it = guess_fibers.find(v); it != guess_fibers.end())
                bv.guess_preimage.insert(it->second.begin(), it->second.end());
        }
        bv.similarity = jaccard(bv.true_preimage, bv.guess_preimage);
        total += bv.similarity;
        report.blocks.push_back(std::move(bv));
    }
    report.mean = total / Rational(blocks.size());
    return report;
}

ValidityReport hypothesis_validity(const Model& truth, const Model& guess,
                                   const DiscreteDomain& domain, std::uint64_t budget) {
    // singleton block per distinct value of the true model's range
    std::set<OutputValue> range;
    for (const auto& p : enumerate_points(domain, budget))
        range.insert(truth.eval(p));
    std::vector<std::vector<OutputValue>> blocks;
    for (const auto& v : range) blocks.push_back({v});
    return hypothesis_validity(truth, guess, domain, blocks, budget);
}

std::pair<Model, MemoryProof> compile_memory(const Model& model, const DiscreteDomain& domain,
                                             std::uint64_t budget) {
    std::map<Point, OutputValue> entries;
    for (const auto& p : enumerate_points(domain, budget))
        entries.emplace(p, model.eval(p));

    Model table = lookup_table_model(domain, std::move(entries), OutputValue::null_atom());

    MemoryProof proof;
    proof.all_agree = true;
    for (const auto& p : enumerate_points(domain, budget)) {
        ++proof.points_checked;
        if (!(table.eval(p) == model.eval(p))) proof.all_agree = false;
    }
    return {std::move(table), proof};
}

SplitMergeReport split_experiment(const Model& model, const std::set<Point>& subset,
                                  const std::set<Point>& part1, const std::set<Point>& part2) {
    for (const auto& p : part1)
        if (part2.count(p))
            fail(ErrorCode::invalid_partition, "parts overlap at " + p.str());
    std::set<Point> uni = part1;
    uni.insert(part2.begin(), part2.end());
    if (uni != subset)
        fail(ErrorCode::invalid_partition, "parts do not cover the analyzed subset");

    SplitMergeReport report;
    report.part1_generators = fibers(model, part1);
    report.part2_generators = fibers(model, part2);
    report.union_generators = fibers(model, subset);
    for (const auto& gen : report.union_generators) {
        bool hits1 = std::any_of(gen.fiber.begin(), gen.fiber.end(),
                                 [&](const Point& p) { return part1.count(p) > 0; });
        bool hits2 = std::any_of(gen.fiber.begin(), gen.fiber.end(),
                                 [&](const Point& p) { return part2.count(p) > 0; });
        if (hits1 && hits2) report.merged_generators.push_back(gen);
    }
    return report;
}

} // namespace sstar
