#include "cf/bijections.hpp"

#include "cf/statistics.hpp"

#include <stdexcept>
#include <string>

namespace cf::bijections {

namespace {

char kind_of(const Step& s) { return s.dy > 0 ? 'U' : (s.dy < 0 ? 'D' : 'F'); }

void require_schroder_shape(const Path& p, const char* who) {
    if (p.end_height() != 0)
        throw std::invalid_argument(std::string(who) + ": path must end on the x-axis");
    for (int i = 0; i <= p.step_count(); ++i)
        if (p.height(i) < 0)
            throw std::invalid_argument(std::string(who) + ": path must stay nonnegative");
}

bool has_axis_flat(const Path& p) {
    for (int i = 0; i < p.step_count(); ++i)
        if (kind_of(p.step(i)) == 'F' && p.height(i) == 0) return true;
    return false;
}

int index_of(const Path& p, char label, const char* who) {
    int idx = p.step_set().index_of_label(label);
    if (idx < 0)
        throw std::invalid_argument(std::string(who) + ": step set lacks an '" +
                                    std::string(1, label) + "' step");
    return idx;
}

}  // namespace

Path schroder_flatten(const Path& p) {
    require_schroder_shape(p, "schroder_flatten");
    if (p.step_count() == 0)
        throw std::invalid_argument("schroder_flatten: path must be nonempty");
    if (has_axis_flat(p))
        throw std::invalid_argument("schroder_flatten: path already has a flat on the axis");
    int ret = -1;
    for (int i = 1; i <= p.step_count(); ++i)
        if (p.height(i) == 0) {
            ret = i;
            break;
        }
    // first return segment is U <dyck'> D
    std::vector<int> seq(p.seq().begin() + 1, p.seq().begin() + (ret - 1));
    seq.push_back(index_of(p, 'F', "schroder_flatten"));
    seq.insert(seq.end(), p.seq().begin() + ret, p.seq().end());
    return Path(p.step_set_ptr(), std::move(seq));
}

Path schroder_elevate(const Path& p) {
    require_schroder_shape(p, "schroder_elevate");
    int last = -1;
    for (int i = 0; i < p.step_count(); ++i)
        if (kind_of(p.step(i)) == 'F' && p.height(i) == 0) last = i;
    if (last < 0)
        throw std::invalid_argument("schroder_elevate: path has no flat on the axis");
    std::vector<int> seq;
    seq.push_back(index_of(p, 'U', "schroder_elevate"));
    seq.insert(seq.end(), p.seq().begin(), p.seq().begin() + last);
    seq.push_back(index_of(p, 'D', "schroder_elevate"));
    seq.insert(seq.end(), p.seq().begin() + last + 1, p.seq().end());
    return Path(p.step_set_ptr(), std::move(seq));
}

Path motzkin_class_map(const Path& q, MotzkinCase c) {
    if (q.end_height() != 1)
        throw std::invalid_argument("motzkin_class_map: path must end at height 1");
    Selector df{Selector::Kind::down_or_flat_start};
    if (count_on_or_below(q, df) != 1)
        throw std::invalid_argument(
            "motzkin_class_map: path needs exactly one down-or-flat step starting on or below "
            "the axis");
    const int down = index_of(q, 'D', "motzkin_class_map");
    std::vector<int> seq;
    if (c == MotzkinCase::leading_flat) {
        if (q.step_count() < 1 || kind_of(q.step(0)) != 'F')
            throw std::invalid_argument("motzkin_class_map: path does not start with a flat step");
        seq.assign(q.seq().begin() + 1, q.seq().end());
    } else {
        if (q.step_count() < 2 || kind_of(q.step(0)) != 'D' || kind_of(q.step(1)) != 'U')
            throw std::invalid_argument("motzkin_class_map: path does not start with DU");
        seq.assign(q.seq().begin() + 2, q.seq().end());
    }
    seq.push_back(down);
    return Path(q.step_set_ptr(), std::move(seq));
}

std::vector<ColoredStep> pair_to_two_colored(const Path& p) {
    if (p.step_count() % 2 != 0)
        throw std::invalid_argument("pair_to_two_colored: odd step count");
    std::vector<ColoredStep> out;
    out.reserve(static_cast<std::size_t>(p.step_count() / 2));
    for (int i = 0; i < p.step_count(); i += 2) {
        char a = kind_of(p.step(i)), b = kind_of(p.step(i + 1));
        if ((a != 'U' && a != 'D') || (b != 'U' && b != 'D') || p.step(i).dx != 1 ||
            p.step(i + 1).dx != 1 || std::abs(static_cast<int>(p.step(i).dy)) != 1 ||
            std::abs(static_cast<int>(p.step(i + 1).dy)) != 1)
            throw std::invalid_argument("pair_to_two_colored: needs unit up/down steps");
        if (a == 'U' && b == 'U') out.push_back({ColoredStep::Kind::up, 0});
        else if (a == 'D' && b == 'D') out.push_back({ColoredStep::Kind::down, 0});
        else if (a == 'U' && b == 'D') out.push_back({ColoredStep::Kind::flat, 1});  // dashed
        else out.push_back({ColoredStep::Kind::flat, 0});                            // solid
    }
    return out;
}

Path two_colored_to_pair(const std::vector<ColoredStep>& steps, StepSetPtr set) {
    int up = set->index_of_label('U');
    int down = set->index_of_label('D');
    if (up < 0 || down < 0)
        throw std::invalid_argument("two_colored_to_pair: step set needs U and D");
    std::vector<int> seq;
    seq.reserve(steps.size() * 2);
    for (const ColoredStep& s : steps) {
        switch (s.kind) {
            case ColoredStep::Kind::up:
                seq.push_back(up);
                seq.push_back(up);
                break;
            case ColoredStep::Kind::down:
                seq.push_back(down);
                seq.push_back(down);
                break;
            case ColoredStep::Kind::flat:
                if (s.color == 1) {
                    seq.push_back(up);
                    seq.push_back(down);
                } else {
                    seq.push_back(down);
                    seq.push_back(up);
                }
                break;
        }
    }
    return Path(std::move(set), std::move(seq));
}

std::string colored_word(const std::vector<ColoredStep>& steps) {
    std::string w;
    for (const ColoredStep& s : steps) {
        switch (s.kind) {
            case ColoredStep::Kind::up: w.push_back('U'); break;
            case ColoredStep::Kind::down: w.push_back('D'); break;
            case ColoredStep::Kind::flat: w.push_back(s.color == 1 ? 'f' : 'F'); break;
        }
    }
    return w;
}

std::vector<long long> block_group(const Path& p, int m) {
    if (m < 1) throw std::invalid_argument("block_group: m must be >= 1");
    if (p.step_count() % m != 0)
        throw std::invalid_argument("block_group: step count " + std::to_string(p.step_count()) +
                                    " is not divisible by " + std::to_string(m));
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(p.step_count() / m));
    for (int j = 0; j < p.step_count(); j += m) {
        long long change = p.height(j + m) - p.height(j);
        if (change % m != 0)
            throw std::invalid_argument("block_group: block change " + std::to_string(change) +
                                        " at step " + std::to_string(j) +
                                        " is not a multiple of " + std::to_string(m));
        out.push_back(change / m);
    }
    return out;
}

}  // namespace cf::bijections
