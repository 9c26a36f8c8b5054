#include "cf/path.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cf {

StepSet::StepSet(std::vector<Step> steps, std::string labels)
    : steps_(std::move(steps)), labels_(std::move(labels)) {
    if (steps_.empty()) throw std::invalid_argument("step set must be non-empty");
    if (steps_.size() != labels_.size())
        throw std::invalid_argument("step set needs one label per step");
    std::set<char> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size())
        throw std::invalid_argument("step labels must be distinct");
    for (const Step& s : steps_)
        if (s.dx < 1) throw std::invalid_argument("step dx must be >= 1");
}

int StepSet::index_of_label(char c) const {
    auto pos = labels_.find(c);
    return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

int StepSet::index_of_vector(const Step& v) const {
    for (std::size_t i = 0; i < steps_.size(); ++i)
        if (steps_[i] == v) return static_cast<int>(i);
    return -1;
}

bool StepSet::has_kind(char udf) const {
    for (const Step& s : steps_) {
        if (udf == 'U' && s.dy > 0) return true;
        if (udf == 'D' && s.dy < 0) return true;
        if (udf == 'F' && s.dy == 0) return true;
    }
    return false;
}

StepSet StepSet::mirrored() const {
    for (char c : labels_)
        if (c != 'U' && c != 'D' && c != 'F')
            throw std::invalid_argument("mirrored() needs canonical U/D/F labels");
    std::vector<Step> ms;
    std::string ml;
    ms.reserve(steps_.size());
    for (const Step& s : steps_) {
        Step m{s.dx, -s.dy};
        ms.push_back(m);
        ml.push_back(m.dy > 0 ? 'U' : (m.dy < 0 ? 'D' : 'F'));
    }
    return StepSet(std::move(ms), std::move(ml));
}

StepSet StepSet::up_down(long long r) {
    return StepSet({{1, 1}, {1, -r}}, "UD");
}

StepSet StepSet::up_down_flat(long long r, long long s) {
    return StepSet({{1, 1}, {s, 0}, {1, -r}}, "UFD");
}

StepSet StepSet::star(long long r) {
    return StepSet({{1, r}, {1, -1}}, "UD");
}

Path::Path(StepSetPtr set, std::vector<int> seq) : set_(std::move(set)), seq_(std::move(seq)) {
    if (!set_) throw std::invalid_argument("path needs a step set");
    vertices_.reserve(seq_.size() + 1);
    Vertex v{0, 0};
    vertices_.push_back(v);
    for (int idx : seq_) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= set_->size())
            throw std::invalid_argument("step index out of range");
        v.x += set_->step(idx).dx;
        v.y += set_->step(idx).dy;
        vertices_.push_back(v);
    }
}

std::string Path::word() const {
    std::string w;
    w.reserve(seq_.size());
    for (int idx : seq_) w.push_back(set_->label(idx));
    return w;
}

Path build_path(StepSetPtr set, const std::string& word) {
    if (!set) throw std::invalid_argument("build_path needs a step set");
    std::vector<int> seq;
    seq.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        int idx = set->index_of_label(word[i]);
        if (idx < 0)
            throw std::invalid_argument("unknown step label '" + std::string(1, word[i]) +
                                        "' at position " + std::to_string(i + 1));
        seq.push_back(idx);
    }
    return Path(std::move(set), std::move(seq));
}

Path conjugate(const Path& p, int i) {
    const int m = p.step_count();
    if (i < 0 || i > m)
        throw std::invalid_argument("conjugate: rotation index " + std::to_string(i) +
                                    " out of range [0, " + std::to_string(m) + "]");
    std::vector<int> seq;
    seq.reserve(p.seq().size());
    for (int j = 0; j < m; ++j) seq.push_back(p.seq()[static_cast<std::size_t>((i + j) % m)]);
    return Path(p.step_set_ptr(), std::move(seq));
}

Path reflect(const Path& p) {
    const StepSet& set = p.step_set();
    // First try to stay inside the path's own step set.
    bool own = true;
    std::vector<int> seq;
    seq.reserve(p.seq().size());
    for (int idx : p.seq()) {
        Step m{set.step(idx).dx, -set.step(idx).dy};
        int j = set.index_of_vector(m);
        if (j < 0) {
            own = false;
            break;
        }
        seq.push_back(j);
    }
    if (own) return Path(p.step_set_ptr(), std::move(seq));

    auto mset = std::make_shared<const StepSet>(set.mirrored());
    seq.clear();
    for (int idx : p.seq()) {
        Step m{set.step(idx).dx, -set.step(idx).dy};
        int j = mset->index_of_vector(m);
        if (j < 0) throw std::invalid_argument("reflect: mirrored step missing from mirror set");
        seq.push_back(j);
    }
    return Path(std::move(mset), std::move(seq));
}

std::vector<PrimeFactor> factor_primes(const Path& p) {
    if (p.end_height() != 0)
        throw std::invalid_argument("factor_primes: path must end on the x-axis (ends at height " +
                                    std::to_string(p.end_height()) + ")");
    std::vector<PrimeFactor> out;
    int begin = 0;
    for (int i = 1; i <= p.step_count(); ++i) {
        if (p.height(i) != 0) continue;
        std::vector<int> seq(p.seq().begin() + begin, p.seq().begin() + i);
        Path sub(p.step_set_ptr(), std::move(seq));
        PrimeFactor::Kind kind = PrimeFactor::Kind::positive;
        for (int j = 0; j < sub.step_count(); ++j) {
            long long a = sub.height(j), b = sub.height(j + 1);
            if ((a > 0 && b < 0) || (a < 0 && b > 0)) {
                kind = PrimeFactor::Kind::mixed;
                break;
            }
            if (b < 0) kind = PrimeFactor::Kind::negative;
        }
        out.push_back(PrimeFactor{kind, std::move(sub), 0});
        begin = i;
    }
    return out;
}

const char* to_string(PrimeFactor::Kind k) {
    switch (k) {
        case PrimeFactor::Kind::positive: return "positive";
        case PrimeFactor::Kind::negative: return "negative";
        case PrimeFactor::Kind::mixed: return "mixed";
    }
    return "?";
}

}  // namespace cf
