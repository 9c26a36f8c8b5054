#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cf/bijections.hpp"
#include "cf/closed_forms.hpp"
#include "cf/enumeration.hpp"

#include <map>
#include <set>

using namespace cf;
using namespace cf::bijections;

namespace {

StepSetPtr schroder_set() {
    return std::make_shared<const StepSet>(StepSet::up_down_flat(1, 2));
}
StepSetPtr motzkin_set() {
    return std::make_shared<const StepSet>(StepSet::up_down_flat(1, 1));
}
StepSetPtr dyck_set() { return std::make_shared<const StepSet>(StepSet::up_down(1)); }

bool has_axis_flat(const Path& p) {
    for (int i = 0; i < p.step_count(); ++i)
        if (p.step(i).dy == 0 && p.height(i) == 0) return true;
    return false;
}

// Schroeder paths of semi-length n, split by axis-flat presence
void schroder_paths(long long n, bool axis_flat, const std::function<void(const Path&)>& fn) {
    for (long long k = 0; k <= n; ++k) {
        FamilySpec spec = FamilySpec::parse("Q:k=" + std::to_string(k) +
                                            ",l=" + std::to_string(n - k) +
                                            ",r=1,s=2,h=0+nonneg" +
                                            (axis_flat ? "" : "+no-flat-on-axis"));
        enumerate_family(spec, [&](const Path& p) {
            if (axis_flat && !has_axis_flat(p)) return;
            fn(p);
        });
    }
}

// Riordan paths: nonnegative, no axis flat, given number of unit steps
void riordan_paths(long long len, const std::function<void(const Path&)>& fn) {
    for (long long k = 0; 2 * k <= len; ++k) {
        FamilySpec spec = FamilySpec::parse("Q:k=" + std::to_string(k) +
                                            ",l=" + std::to_string(len - 2 * k) +
                                            ",r=1,s=1,h=0+nonneg+no-flat-on-axis");
        enumerate_family(spec, fn);
    }
}

// The two X = 1 classes of the Motzkin-side construction
void motzkin_x1_paths(long long len, const std::function<void(const Path&)>& fn) {
    Selector df = Selector::parse("down-or-flat-start");
    for (long long k = 0; 2 * k + 1 <= len + 1; ++k) {
        long long l = len - 2 * k;
        if (l < 0) continue;
        FamilySpec spec = FamilySpec::parse("Q:k=" + std::to_string(k) + ",l=" +
                                            std::to_string(l) + ",r=1,s=1,h=1");
        enumerate_family(spec, [&](const Path& p) {
            if (count_on_or_below(p, df) == 1) fn(p);
        });
    }
}

}  // namespace

TEST_CASE("flatten worked examples") {
    Path ud = build_path(schroder_set(), "UD");
    CHECK(schroder_flatten(ud).word() == "F");
    Path p = build_path(schroder_set(), "UUDDUD");
    CHECK(schroder_flatten(p).word() == "UDFUD");
    CHECK(schroder_elevate(build_path(schroder_set(), "F")).word() == "UD");
}

TEST_CASE("flatten and elevate reject out-of-domain paths") {
    CHECK_THROWS_AS(schroder_flatten(build_path(schroder_set(), "FUD")),
                    std::invalid_argument);  // already has an axis flat
    CHECK_THROWS_AS(schroder_flatten(build_path(schroder_set(), "")), std::invalid_argument);
    CHECK_THROWS_AS(schroder_flatten(build_path(schroder_set(), "UU")), std::invalid_argument);
    CHECK_THROWS_AS(schroder_flatten(build_path(schroder_set(), "DU")), std::invalid_argument);
    CHECK_THROWS_AS(schroder_elevate(build_path(schroder_set(), "UFD")),
                    std::invalid_argument);  // no flat on the axis
}

TEST_CASE("flatten/elevate are mutually inverse bijections witnessing R = 2S") {
    for (long long n = 1; n <= 6; ++n) {
        std::set<std::string> without, with;
        schroder_paths(n, false, [&](const Path& p) {
            if (p.step_count() == 0) return;
            Path q = schroder_flatten(p);
            CHECK(has_axis_flat(q));
            CHECK(q.end_height() == 0);
            CHECK(schroder_elevate(q).word() == p.word());
            without.insert(p.word());
        });
        schroder_paths(n, true, [&](const Path& p) {
            Path q = schroder_elevate(p);
            CHECK(!has_axis_flat(q));
            CHECK(schroder_flatten(q).word() == p.word());
            with.insert(p.word());
        });
        Int small = forms::small_schroder_number(n);
        CHECK(Int(without.size()) == small);
        CHECK(Int(with.size()) == small);
        CHECK(Int(without.size() + with.size()) == forms::schroder_number(n));
    }
}

TEST_CASE("motzkin class maps witness M_n = J_n + J_{n+1}") {
    for (long long n = 1; n <= 7; ++n) {
        std::set<std::string> images_flat, images_du, riordan_n, riordan_n1;
        long long flat_count = 0, du_count = 0;
        motzkin_x1_paths(n, [&](const Path& q) {
            if (q.step(0).dy == 0) {
                Path img = motzkin_class_map(q, MotzkinCase::leading_flat);
                CHECK(img.end_height() == 0);
                CHECK(!has_axis_flat(img));
                CHECK(img.step_count() == n + 1);
                images_flat.insert(img.word());
                ++flat_count;
            } else if (q.step(0).dy < 0) {
                Path img = motzkin_class_map(q, MotzkinCase::leading_du);
                CHECK(!has_axis_flat(img));
                CHECK(img.step_count() == n);
                images_du.insert(img.word());
                ++du_count;
            }
        });
        riordan_paths(n + 1, [&](const Path& p) { riordan_n1.insert(p.word()); });
        riordan_paths(n, [&](const Path& p) { riordan_n.insert(p.word()); });
        // injective (image sets as large as the classes) and onto the Riordan paths
        CHECK(Int(flat_count) == forms::riordan_aggregate(n + 1));
        CHECK(Int(du_count) == forms::riordan_aggregate(n));
        CHECK(images_flat == riordan_n1);
        CHECK(images_du == riordan_n);
        CHECK(forms::motzkin_number(n) ==
              forms::riordan_aggregate(n) + forms::riordan_aggregate(n + 1));
    }
}

TEST_CASE("motzkin class maps validate their case") {
    Path q = build_path(motzkin_set(), "FUUDU");  // ends at height... F U U D U -> 2
    CHECK_THROWS_AS(motzkin_class_map(q, MotzkinCase::leading_flat), std::invalid_argument);
    Path ok = build_path(motzkin_set(), "FUDU");
    CHECK(motzkin_class_map(ok, MotzkinCase::leading_flat).word() == "UDUD");
    CHECK_THROWS_AS(motzkin_class_map(ok, MotzkinCase::leading_du), std::invalid_argument);
}

TEST_CASE("pair map worked examples") {
    Path p = build_path(dyck_set(), "UDDU");
    auto img = pair_to_two_colored(p);
    REQUIRE(img.size() == 2);
    CHECK(img[0] == ColoredStep{ColoredStep::Kind::flat, 1});  // dashed
    CHECK(img[1] == ColoredStep{ColoredStep::Kind::flat, 0});  // solid
    CHECK(colored_word(img) == "fF");

    auto img2 = pair_to_two_colored(build_path(dyck_set(), "UUDD"));
    CHECK(colored_word(img2) == "UD");

    CHECK_THROWS_AS(pair_to_two_colored(build_path(dyck_set(), "UUD")), std::invalid_argument);
}

TEST_CASE("pair map round-trips over P(n-1,1,2) and halves the endpoint height") {
    for (long long n = 1; n <= 5; ++n) {
        FamilySpec spec = FamilySpec::parse("P:n=" + std::to_string(n - 1) + ",r=1,h=2");
        enumerate_family(spec, [&](const Path& p) {
            auto img = pair_to_two_colored(p);
            long long h = 0;
            for (const auto& s : img)
                h += s.kind == ColoredStep::Kind::up ? 1
                                                     : (s.kind == ColoredStep::Kind::down ? -1 : 0);
            CHECK(2 * h == p.end_height());
            CHECK(h == 1);
            CHECK(two_colored_to_pair(img, p.step_set_ptr()).word() == p.word());
        });
    }
}

TEST_CASE("block grouping") {
    Path p = build_path(dyck_set(), "UDDU");
    CHECK(block_group(p, 2) == std::vector<long long>{0, 0});
    CHECK(block_group(build_path(dyck_set(), "UUDD"), 2) == std::vector<long long>{1, -1});
    CHECK_THROWS_AS(block_group(build_path(dyck_set(), "UUD"), 2), std::invalid_argument);
    CHECK_THROWS_AS(block_group(build_path(dyck_set(), "UD"), 0), std::invalid_argument);
    // a block change that is not a multiple of the block size is reported
    auto set2 = std::make_shared<const StepSet>(StepSet::up_down(2));
    CHECK_THROWS_AS(block_group(build_path(set2, "UD"), 2), std::invalid_argument);
}

TEST_CASE("blocks of r+1 steps on P(n-1,r,r+1) always scale to integers summing to 1") {
    for (long long r = 1; r <= 3; ++r)
        for (long long n = 2; n <= 4; ++n) {
            FamilySpec spec = FamilySpec::parse("P:n=" + std::to_string(n - 1) +
                                                ",r=" + std::to_string(r) + ",h=" +
                                                std::to_string(r + 1));
            enumerate_family(spec, [&](const Path& p) {
                auto blocks = block_group(p, static_cast<int>(r + 1));
                CHECK(blocks.size() == static_cast<std::size_t>(n));
                long long sum = 0;
                for (long long b : blocks) sum += b;
                CHECK(sum == 1);
            });
        }
}
