#pragma once

#include <memory>
#include <string>
#include <vector>

namespace cf {

struct Step {
    long long dx = 1;  // horizontal advance, >= 1
    long long dy = 0;  // vertical change
    bool operator==(const Step&) const = default;
};

// An ordered list of steps with one-character labels (canonically U, D, F).
class StepSet {
public:
    StepSet(std::vector<Step> steps, std::string labels);

    const std::vector<Step>& steps() const { return steps_; }
    const std::string& labels() const { return labels_; }
    std::size_t size() const { return steps_.size(); }
    const Step& step(int i) const { return steps_[static_cast<std::size_t>(i)]; }
    char label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

    int index_of_label(char c) const;        // -1 if absent
    int index_of_vector(const Step& v) const;  // -1 if absent
    bool has_kind(char udf) const;           // 'U' dy>0, 'D' dy<0, 'F' dy==0

    // Mirror across the x-axis. Labels are reassigned by the sign of dy
    // (requires the original labels to be within {U,D,F}).
    StepSet mirrored() const;

    // {U:(1,1), D:(1,-r)} for the families P(n,r,h)
    static StepSet up_down(long long r);
    // {U:(1,1), F:(s,0), D:(1,-r)} for the families Q(k,l,r,s,h)
    static StepSet up_down_flat(long long r, long long s);
    // {U:(1,r), D:(1,-1)}, reflections of P(n,r,-h)
    static StepSet star(long long r);

    bool operator==(const StepSet& o) const { return steps_ == o.steps_ && labels_ == o.labels_; }

private:
    std::vector<Step> steps_;
    std::string labels_;
};

using StepSetPtr = std::shared_ptr<const StepSet>;

struct Vertex {
    long long x = 0;
    long long y = 0;
    bool operator==(const Vertex&) const = default;
};

// Immutable lattice path anchored at the origin.
class Path {
public:
    Path(StepSetPtr set, std::vector<int> seq);

    const StepSet& step_set() const { return *set_; }
    const StepSetPtr& step_set_ptr() const { return set_; }
    const std::vector<int>& seq() const { return seq_; }

    int step_count() const { return static_cast<int>(seq_.size()); }
    const Step& step(int i) const { return set_->step(seq_[static_cast<std::size_t>(i)]); }
    char label(int i) const { return set_->label(seq_[static_cast<std::size_t>(i)]); }

    // Vertices P_0..P_m; vertex i is the start of step i.
    const std::vector<Vertex>& vertices() const { return vertices_; }
    long long height(int i) const { return vertices_[static_cast<std::size_t>(i)].y; }
    long long end_height() const { return vertices_.back().y; }
    long long length() const { return vertices_.back().x; }  // x-coordinate of endpoint

    std::string word() const;

    bool operator==(const Path& o) const { return *set_ == *o.set_ && seq_ == o.seq_; }

private:
    StepSetPtr set_;
    std::vector<int> seq_;
    std::vector<Vertex> vertices_;
};

// Word codec: one character per step using the step set labels.
// Rejects unknown labels, reporting the 1-based offending position.
Path build_path(StepSetPtr set, const std::string& word);

// Cyclic rotation sigma^i, re-anchored at the origin. 0 <= i <= step count.
Path conjugate(const Path& p, int i);

// Reflection across the x-axis. If every mirrored vector exists in the
// path's own step set the result reuses it (e.g. UD -> DU for Dyck steps);
// otherwise the canonical mirrored step set is used (P(n,r,h) -> P*(n,r,-h)).
Path reflect(const Path& p);

struct PrimeFactor {
    enum class Kind { positive, negative, mixed };
    Kind kind;
    Path sub_path;
    long long start_height = 0;
};

// Cut a path that starts and ends on the x-axis at every visit to height 0.
// A factor containing an axis-crossing down step is a mixed prime (r > 1).
std::vector<PrimeFactor> factor_primes(const Path& p);

const char* to_string(PrimeFactor::Kind k);

}  // namespace cf
