/*
   Copyright 2026 The shiftalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <omp.h>

#include <atomic>
#include <stdexcept>
#include <vector>

#include "shiftalg/commutant.hpp"
#include "shiftalg/parallel.hpp"

namespace shiftalg {
namespace {

class ThreadCount : public ::testing::TestWithParam<int> {
   protected:
    void SetUp() override {
        saved_ = omp_get_max_threads();
        omp_set_num_threads(GetParam());
    }
    void TearDown() override { omp_set_num_threads(saved_); }

   private:
    int saved_ = 1;
};

TEST_P(ThreadCount, VisitsEveryIndexOnce) {
    std::vector<std::atomic<int>> hits(257);
    parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST_P(ThreadCount, RethrowsOnCaller) {
    EXPECT_THROW(parallel_for(64, [](std::size_t i) {
                     if (i == 13) throw std::runtime_error("boom");
                 }),
                 std::runtime_error);
}

TEST_P(ThreadCount, KernelsIndependentOfThreadCount) {
    const G0Config cfg(FactoredPoly({{1, 2}, {GaussianRational(1, 2), 1}}));
    const Functional phi = Functional::delta(0, 2) + Functional::delta(GaussianRational::i(), 1, 3);
    EXPECT_EQ(bphi_matrix(cfg, phi, 10), serial::bphi_matrix(cfg, phi, 10));
}

TEST(ParallelTest, EmptyRange) {
    int calls = 0;
    parallel_for(0, [&](std::size_t) { ++calls; });
    EXPECT_EQ(calls, 0);
}

INSTANTIATE_TEST_SUITE_P(Threads, ThreadCount, ::testing::Values(1, 2, 4));

}  // namespace
}  // namespace shiftalg
