#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "houtu/model.hpp"

using namespace houtu;

namespace {

model::Task task(int job, int stage, int idx, double r, double p_s) {
    model::Task t;
    t.id = {job, stage, idx};
    t.r = r;
    t.p = from_seconds(p_s);
    return t;
}

model::DagJob fig6_shaped_job() {
    // 3 stages: {(0.5,4)x3, (0.5,6)x2, (1.0,2)x1}, stage 2 depends on 0 and 1
    model::DagJob j;
    j.id = 0;
    model::Stage s0, s1, s2;
    s0.id = 0;
    for (int i = 0; i < 3; ++i) s0.tasks.push_back(task(0, 0, i, 0.5, 4.0));
    s1.id = 1;
    for (int i = 0; i < 2; ++i) s1.tasks.push_back(task(0, 1, i, 0.5, 6.0));
    s2.id = 2;
    s2.predecessors = {0, 1};
    s2.tasks.push_back(task(0, 2, 0, 1.0, 2.0));
    j.stages = {s0, s1, s2};
    return j;
}

}  // namespace

TEST_CASE("job_work sums r*p over all tasks") {
    model::DagJob j;
    j.id = 0;
    model::Stage s;
    s.id = 0;
    s.tasks.push_back(task(0, 0, 0, 0.5, 10.0));
    j.stages = {s};
    CHECK(model::job_work(j) == doctest::Approx(5.0));

    model::DagJob empty;
    CHECK(model::job_work(empty) == doctest::Approx(0.0));

    CHECK(model::job_work(fig6_shaped_job()) == doctest::Approx(14.0));
}

TEST_CASE("release_ready_tasks releases only stages with all predecessors done") {
    SUBCASE("linear two-stage job") {
        model::DagJob j;
        model::Stage s0, s1;
        s0.id = 0;
        s0.tasks.push_back(task(0, 0, 0, 0.5, 1.0));
        s1.id = 1;
        s1.predecessors = {0};
        for (int i = 0; i < 3; ++i) s1.tasks.push_back(task(0, 1, i, 0.5, 1.0));
        j.stages = {s0, s1};

        auto first = model::release_ready_tasks(j, 0);
        CHECK(first.size() == 1);
        j.stages[0].tasks[0].state = model::TaskState::Done;
        auto second = model::release_ready_tasks(j, 5);
        CHECK(second.size() == 3);
        for (const auto& t : j.stages[1].tasks) {
            CHECK(t.state == model::TaskState::Waiting);
            CHECK(t.wait == 0);
            CHECK(t.released_at == 5);
        }
    }
    SUBCASE("diamond with one predecessor incomplete releases nothing") {
        model::DagJob j;
        model::Stage a, b, c, d;
        a.id = 0;
        a.tasks.push_back(task(0, 0, 0, 0.5, 1.0));
        b.id = 1;
        b.tasks.push_back(task(0, 1, 0, 0.5, 1.0));
        c.id = 2;
        c.predecessors = {0, 1};
        c.tasks.push_back(task(0, 2, 0, 0.5, 1.0));
        d.id = 3;
        d.predecessors = {2};
        d.tasks.push_back(task(0, 3, 0, 0.5, 1.0));
        j.stages = {a, b, c, d};
        j.stages[0].tasks[0].state = model::TaskState::Done;
        j.stages[1].tasks[0].state = model::TaskState::Running;
        auto rel = model::release_ready_tasks(j, 0);
        CHECK(rel.empty());
        CHECK(j.stages[2].tasks[0].state == model::TaskState::Unreleased);
    }
    SUBCASE("stage 2 releases once stages 0 and 1 complete") {
        auto j = fig6_shaped_job();
        for (auto& t : j.stages[0].tasks) t.state = model::TaskState::Done;
        for (auto& t : j.stages[1].tasks) t.state = model::TaskState::Done;
        auto rel = model::release_ready_tasks(j, 12);
        CHECK(rel.size() == 1);
        CHECK(rel[0] == model::TaskId{0, 2, 0});
    }
}

TEST_CASE("makespan and avg_response_time") {
    auto done = [](int id, double rel, double comp) {
        model::DagJob j;
        j.id = id;
        j.release_time = from_seconds(rel);
        j.completion_time = from_seconds(comp);
        return j;
    };
    SUBCASE("makespan is the max completion") {
        std::vector<model::DagJob> jobs{done(0, 0, 10), done(1, 0, 20), done(2, 0, 15)};
        CHECK(model::makespan(jobs) == from_seconds(20));
        CHECK(model::makespan({done(0, 0, 7)}) == from_seconds(7));
    }
    SUBCASE("response subtracts release times") {
        CHECK(model::avg_response_time({done(0, 5, 25)}) == doctest::Approx(20.0));
        std::vector<model::DagJob> two{done(0, 0, 10), done(1, 0, 30)};
        CHECK(model::avg_response_time(two) == doctest::Approx(20.0));
        std::vector<model::DagJob> serial{done(0, 0, 150), done(1, 100, 200)};
        CHECK(model::makespan(serial) == from_seconds(200));
        CHECK(model::avg_response_time(serial) == doctest::Approx(125.0));
    }
    SUBCASE("errors") {
        model::DagJob incomplete;
        incomplete.release_time = 0;
        CHECK_THROWS(model::makespan({incomplete}));
        CHECK_THROWS(model::avg_response_time({}));
    }
}

TEST_CASE("admission rejects out-of-bound tasks, cycles, heterogeneous stages") {
    model::SchedulerParams params;
    SUBCASE("r below theta") {
        model::DagJob j;
        model::Stage s;
        s.id = 0;
        s.tasks.push_back(task(0, 0, 0, 0.01, 1.0));
        j.stages = {s};
        CHECK_THROWS(model::admit_job(j, params));
    }
    SUBCASE("r + delta above 1") {
        model::DagJob j;
        model::Stage s;
        s.id = 0;
        s.tasks.push_back(task(0, 0, 0, 0.6, 1.0));
        j.stages = {s};
        CHECK_THROWS(model::admit_job(j, params));
    }
    SUBCASE("cycle") {
        model::DagJob j;
        model::Stage s0, s1;
        s0.id = 0;
        s0.predecessors = {1};
        s0.tasks.push_back(task(0, 0, 0, 0.4, 1.0));
        s1.id = 1;
        s1.predecessors = {0};
        s1.tasks.push_back(task(0, 1, 0, 0.4, 1.0));
        j.stages = {s0, s1};
        CHECK_THROWS(model::admit_job(j, params));
    }
    SUBCASE("heterogeneous stage") {
        model::DagJob j;
        model::Stage s;
        s.id = 0;
        s.tasks.push_back(task(0, 0, 0, 0.4, 1.0));
        s.tasks.push_back(task(0, 0, 1, 0.3, 1.0));
        j.stages = {s};
        CHECK_THROWS(model::admit_job(j, params));
    }
    SUBCASE("valid job passes") {
        model::DagJob j;
        model::Stage s;
        s.id = 0;
        s.tasks.push_back(task(0, 0, 0, 0.4, 1.0));
        j.stages = {s};
        CHECK_NOTHROW(model::admit_job(j, params));
    }
}

TEST_CASE("scheduler params validation") {
    model::SchedulerParams p;
    CHECK_NOTHROW(p.validate());
    p.rho = 1.0;
    CHECK_THROWS(p.validate());
    p.rho = 2.0;
    p.delta = 1.0;
    CHECK_THROWS(p.validate());
}
