#include "pvi/pipeline.hpp"

#include <sstream>

#include "pvi/contiguous.hpp"
#include "pvi/errors.hpp"
#include "pvi/fractional_linear.hpp"

namespace pvi {

std::string TransformStep::str() const {
    switch (kind) {
        case Kind::FL: {
            std::string n = fl_row(fl_index).tos_name;
            for (auto& c : n)
                if (c == ' ') c = '_';
            return "fl[" + n + "]";
        }
        case Kind::Okamoto:
            return "okamoto[" + to_string(nu.n0) + "," + to_string(nu.n1) + "," +
                   to_string(nu.nt) + "," + to_string(nu.ni) + "]";
        case Kind::ManinQuadratic:
            return "manin";
        case Kind::TableQuadratic:
            return "table[" + std::to_string(top_row) + "," + std::to_string(bottom_row) +
                   (swap_ab ? ",swap]" : "]");
        case Kind::KitaevA:
            return "kitaevA";
        case Kind::KitaevA_b1:
            return "kitaevA+";
        case Kind::KitaevA_half:
            return "kitaevAhalf";
        case Kind::KitaevB:
            return "kitaevB";
        case Kind::ParamShift:
            switch (shift) {
                case ShiftKind::BPlusOne: return "shift[b+1]";
                case ShiftKind::BMinusOne: return "shift[b-1]";
                case ShiftKind::SwapAB: return "shift[a<->b]";
                default: return "shift[b->1-b]";
            }
        case Kind::ContiguousY0:
            return "contiguousY0";
        default:
            return "inverse";
    }
}

namespace {

std::vector<std::string> split_top_level(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

Rational arg_rational(const std::string& s) {
    auto q = parse_rational(trimmed(s));
    if (!q) throw ParseError("pipeline arguments must be exact rationals p/q, got '" + s + "'");
    return *q;
}

}  // namespace

std::vector<TransformStep> parse_pipeline(const std::string& text) {
    std::vector<TransformStep> steps;
    for (const std::string& raw : split_top_level(text, ',')) {
        std::string item = trimmed(raw);
        if (item.empty()) continue;
        TransformStep st{};
        std::string head = item;
        std::vector<std::string> args;
        auto open = item.find('[');
        if (open != std::string::npos) {
            if (item.back() != ']') throw ParseError("missing ']' in step: " + item);
            head = item.substr(0, open);
            std::string inner = item.substr(open + 1, item.size() - open - 2);
            for (auto& a : split_top_level(inner, ',')) args.push_back(trimmed(a));
        }
        if (head == "fl") {
            if (args.size() != 1) throw ParseError("fl needs one row name");
            std::string name = args[0];
            for (auto& c : name)
                if (c == '_') c = ' ';
            st.kind = TransformStep::Kind::FL;
            st.fl_index = fl_row_by_name(name).index;
        } else if (head == "okamoto") {
            if (args.size() != 4) throw ParseError("okamoto needs four rationals");
            st.kind = TransformStep::Kind::Okamoto;
            st.nu = NuTuple{arg_rational(args[0]), arg_rational(args[1]), arg_rational(args[2]),
                            arg_rational(args[3])};
        } else if (head == "manin") {
            st.kind = TransformStep::Kind::ManinQuadratic;
        } else if (head == "table") {
            if (args.size() < 2) throw ParseError("table needs [top,bottom]");
            st.kind = TransformStep::Kind::TableQuadratic;
            st.top_row = std::stoi(args[0]);
            st.bottom_row = std::stoi(args[1]);
            st.swap_ab = args.size() > 2 && args[2] == "swap";
        } else if (head == "kitaevA") {
            st.kind = TransformStep::Kind::KitaevA;
        } else if (head == "kitaevA+") {
            st.kind = TransformStep::Kind::KitaevA_b1;
        } else if (head == "kitaevAhalf") {
            st.kind = TransformStep::Kind::KitaevA_half;
        } else if (head == "kitaevB") {
            st.kind = TransformStep::Kind::KitaevB;
        } else if (head == "shift") {
            if (args.size() != 1) throw ParseError("shift needs a kind");
            st.kind = TransformStep::Kind::ParamShift;
            st.shift = shift_kind_from_name(args[0]);
        } else if (head == "contiguousY0") {
            st.kind = TransformStep::Kind::ContiguousY0;
        } else if (head == "inverse") {
            st.kind = TransformStep::Kind::InverseQuadratic;
        } else {
            throw ParseError("unknown pipeline step: " + item);
        }
        steps.push_back(st);
    }
    if (steps.empty()) throw ParseError("empty pipeline");
    return steps;
}

namespace {

// Re-emits the solution of the most recent chain variant with the current
// (possibly shifted) context.
struct ChainState {
    ChainA chain;
    TransformStep::Kind variant = TransformStep::Kind::KitaevA;

    ParamSolution emit() const {
        switch (variant) {
            case TransformStep::Kind::KitaevA_b1: return chain.Y0_b_plus_one();
            case TransformStep::Kind::KitaevA_half: return chain.Y0_half();
            default: return chain.Y0();
        }
    }
};

}  // namespace

ParamSolution apply_pipeline(const ParamSolution& start,
                             const std::vector<TransformStep>& steps, RootResolver* roots) {
    ParamSolution cur = start;
    std::optional<ChainState> chain;
    for (const auto& st : steps) {
        switch (st.kind) {
            case TransformStep::Kind::FL:
                cur = fl_apply(cur, fl_row(st.fl_index));
                chain.reset();
                break;
            case TransformStep::Kind::Okamoto:
                cur = okamoto(cur, st.nu);
                chain.reset();
                break;
            case TransformStep::Kind::ManinQuadratic:
                cur = manin_quadratic(cur, roots);
                chain.reset();
                break;
            case TransformStep::Kind::TableQuadratic:
                cur = table_quadratic(cur, st.top_row, st.bottom_row, st.swap_ab, roots);
                chain.reset();
                break;
            case TransformStep::Kind::KitaevA:
            case TransformStep::Kind::KitaevA_b1:
            case TransformStep::Kind::KitaevA_half: {
                ChainState state{build_chain_a(cur, roots), st.kind};
                cur = state.emit();
                chain = std::move(state);
                break;
            }
            case TransformStep::Kind::KitaevB:
                cur = kitaev_b(cur, roots);
                chain.reset();
                break;
            case TransformStep::Kind::ParamShift: {
                if (!chain)
                    throw ShapeError(
                        "shift steps need a preceding kitaevA-family step in the pipeline");
                ShiftContext ctx{chain->chain.a, chain->chain.b, chain->chain.tau,
                                 chain->chain.eta, chain->chain.y0};
                ctx = param_shift(ctx, st.shift);
                chain->chain.a = ctx.a;
                chain->chain.b = ctx.b;
                chain->chain.eta = ctx.eta;
                chain->chain.y0 = ctx.y0;
                cur = chain->emit();
                break;
            }
            case TransformStep::Kind::ContiguousY0: {
                if (!chain)
                    throw ShapeError(
                        "contiguousY0 needs a preceding kitaevA-family step in the pipeline");
                cur = contiguous_y0(chain->chain.Y1(), chain->chain.Y2(), chain->chain.a,
                                    chain->chain.b);
                break;
            }
            case TransformStep::Kind::InverseQuadratic: {
                if (!chain)
                    throw ShapeError(
                        "inverse needs a preceding kitaevA-family step in the pipeline");
                cur = inverse_quadratic(chain->chain.Y1(), chain->chain.Y2(), chain->chain.tau,
                                        chain->chain.a, chain->chain.b);
                break;
            }
        }
    }
    return cur;
}

}  // namespace pvi
