// Copyright 2026 The kcsched Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kcsched/report.h"

#include <gtest/gtest.h>

#include <sstream>

#include "kcsched/generators.h"
#include "kcsched/local_ratio.h"
#include "kcsched/release.h"

namespace kcsched {
namespace {

TEST(DigestTest, Sha256OfCanonicalBytes) {
  // sha256 of the canonical p=4 tight file, computed externally.
  EXPECT_EQ(InstanceDigest(GenTight(4)),
            "56032a7f6434bf68a37922b50e0d390c08459b397f5286d399052e307767f533");
  EXPECT_NE(InstanceDigest(GenTight(5)), InstanceDigest(GenTight(4)));
}

TEST(TraceJsonTest, GrowTraceLines) {
  const std::string text = GrowTraceJsonl(Grow(GenTight(4)).trace);
  std::istringstream in(text);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 7u);
  EXPECT_EQ(lines[0], R"({"k":1,"t":1,"A":[],"D":16,"alpha":"0","tight_job":3,"tight_time":10})");
  EXPECT_EQ(lines[3], R"({"k":4,"t":11,"A":[],"D":6,"alpha":"1","tight_job":3,"tight_time":16})");
  EXPECT_EQ(lines[5],
            R"({"k":6,"t":1,"A":[1,3,4],"D":4,"alpha":"0","tight_job":2,"tight_time":11})");
}

TEST(TraceJsonTest, LocalRatioLines) {
  const std::string lr = LocalRatioTraceJsonl(SolveLocalRatio(GenTight(4)).trace);
  EXPECT_EQ(lr.substr(0, lr.find('\n')),
            R"({"depth":1,"t_star":1,"D":16,"alpha":"0","job":3,"s":10,"undo_kept":false})");
  const Instance rel({Job{2, {}, 0}, Job{1, {}, 1}});
  const std::string text = LocalRatioTraceJsonl(SolveRelease(rel).trace);
  EXPECT_NE(text.find("\"r_star\":"), std::string::npos);
}

TEST(TraceJsonTest, RationalAlphaAsString) {
  std::vector<LocalRatioFrame> frames = {{1, 2, std::nullopt, 3, MakeRational(7, 3), 0, 4, 0, true}};
  EXPECT_NE(LocalRatioTraceJsonl(frames).find(R"("alpha":"7/3")"), std::string::npos);
}

TEST(ScheduleJsonTest, Format) {
  Schedule s{{{1, 0, 2}, {0, 2, 3}}, {3, 2}, Cost(3)};
  EXPECT_EQ(ScheduleToJson(s).dump(),
            R"({"segments":[[2,0,2],[1,2,3]],"completions":[3,2],"cost":3})");
}

TEST(PartitionJsonTest, Format) {
  const Instance inst({Job{6, CostFunction{{3, Cost(1)}, {5, Cost(2)}, {6, Cost(3)}}, 0}});
  const IntervalPartition part = BuildPartition(inst, Rational(1));
  EXPECT_EQ(PartitionToJson(part, inst).dump(),
            R"({"epsilon":"1","intervals":[[1,2],[3,4],[5,6]],"modified_costs":[[0,1,3]]})");
}

TEST(RunReportTest, OptionalFields) {
  RunReport r;
  r.instance_digest = "abc";
  r.algorithm = "pd";
  r.primal_cost = Cost(16);
  r.dual_value = Rational(6);
  r.ratio = MakeRational(8, 3);
  r.due_dates = DueDateAssignment({11, 11, 16, 16});
  const std::string text = RunReportToJson(r).dump();
  EXPECT_NE(text.find(R"("dual_value":"6","ratio":"8/3")"), std::string::npos);
  EXPECT_EQ(text.find("wall_seconds"), std::string::npos);
  EXPECT_EQ(text.find("\"opt\""), std::string::npos);
  r.ratio.reset();
  EXPECT_EQ(RunReportToJson(r).dump().find("ratio"), std::string::npos);
}

TEST(DualJsonTest, NonzeroEntriesOnly) {
  const Json j = DualToJson(Grow(GenTight(4)).dual);
  EXPECT_EQ(j.dump(), R"({"value":"6","nonzero":[{"t":11,"A":[],"D":6,"y":"1"}]})");
}

}  // namespace
}  // namespace kcsched
