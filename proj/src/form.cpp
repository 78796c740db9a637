#include "sympform/form.hpp"

#include <algorithm>
#include <stdexcept>

#include "sympform/kernels.hpp"

namespace sympform {

namespace {

const std::vector<std::vector<std::vector<int>>>& index_tables() {
    static const std::vector<std::vector<std::vector<int>>> tables = {
        {{}},                        // degree 0
        {{0}, {1}, {2}},             // degree 1
        {{0, 1}, {0, 2}, {1, 2}},    // degree 2
        {{0, 1, 2}},                 // degree 3
        {},                          // degree 4: no components on a 3-manifold
    };
    return tables;
}

const char* const kAxisLetters = "xyt";

/// Sign of merging two disjoint ascending multi-indices (count of
/// transpositions), or 0 if they share an axis.
int merge_sign(const std::vector<int>& I, const std::vector<int>& J,
               std::vector<int>& merged) {
    merged.clear();
    int inversions = 0;
    for (int j : J)
        for (int i : I)
            if (i == j) return 0;
    for (int j : J)
        for (int i : I)
            if (i > j) ++inversions;
    merged.insert(merged.end(), I.begin(), I.end());
    merged.insert(merged.end(), J.begin(), J.end());
    std::sort(merged.begin(), merged.end());
    return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

int cycle_dimension(Cycle c) {
    switch (c) {
        case Cycle::X:
        case Cycle::Y:
        case Cycle::Theta:
            return 1;
        default:
            return 2;
    }
}

std::string cycle_name(Cycle c) {
    switch (c) {
        case Cycle::X: return "x";
        case Cycle::Y: return "y";
        case Cycle::Theta: return "theta";
        case Cycle::YTheta: return "yt";
        case Cycle::ThetaX: return "tx";
        case Cycle::XY: return "xy";
    }
    return "?";
}

Form::Form(int degree, int K) : degree_(degree), K_(K) {
    if (degree < 0 || degree > 4) throw std::invalid_argument("Form: bad degree");
    comps_.assign(index_tables()[degree].size(), ScalarField(K));
}

Form Form::constant_one_form(int K, const std::array<double, 3>& a) {
    Form f(1, K);
    for (int i = 0; i < 3; ++i) f.comps_[i] = ScalarField::constant(K, a[i]);
    return f;
}

Form Form::constant_two_form_b2(int K, const std::array<double, 3>& h) {
    Form f(2, K);
    // B2 basis (dy^dt, dt^dx, dx^dy) vs lex components (xy, xt, yt):
    // dt^dx = -dx^dt.
    f.comps_[0] = ScalarField::constant(K, h[2]);   // xy
    f.comps_[1] = ScalarField::constant(K, -h[1]);  // xt
    f.comps_[2] = ScalarField::constant(K, h[0]);   // yt
    return f;
}

Form Form::volume(int K) {
    Form f(3, K);
    f.comps_[0] = ScalarField::constant(K, 1.0);
    return f;
}

std::vector<int> Form::component_index(int degree, int i) {
    return index_tables()[degree][i];
}

std::string Form::component_name(int degree, int i) {
    std::string s;
    for (int a : index_tables()[degree][i]) s += kAxisLetters[a];
    return s;
}

int Form::component_position(int degree, const std::vector<int>& idx) {
    const auto& tab = index_tables()[degree];
    for (std::size_t i = 0; i < tab.size(); ++i)
        if (tab[i] == idx) return static_cast<int>(i);
    throw std::invalid_argument("Form: no such component");
}

double Form::max_abs_coeff() const {
    double m = 0;
    for (const auto& c : comps_) m = std::max(m, c.max_abs_coeff());
    return m;
}

double Form::tail_l1() const {
    double t = 0;
    for (const auto& c : comps_) t = std::max(t, c.tail_l1);
    return t;
}

bool Form::is_constant() const {
    for (const auto& c : comps_)
        if (!c.is_constant()) return false;
    return true;
}

Form Form::promoted(int newK) const {
    Form out(degree_, newK);
    for (std::size_t i = 0; i < comps_.size(); ++i) out.comps_[i] = comps_[i].promoted(newK);
    return out;
}

std::vector<double> Form::evaluate(const Point3& p) const {
    std::vector<double> vals;
    vals.reserve(comps_.size());
    for (const auto& c : comps_) vals.push_back(c.evaluate(p));
    return vals;
}

Form Form::operator+(const Form& o) const {
    if (o.degree_ != degree_) throw std::invalid_argument("Form+: degree mismatch");
    Form out = promoted(std::max(K_, o.K_));
    for (std::size_t i = 0; i < comps_.size(); ++i) out.comps_[i] += o.comps_[i];
    return out;
}

Form Form::operator-(const Form& o) const {
    if (o.degree_ != degree_) throw std::invalid_argument("Form-: degree mismatch");
    Form out = promoted(std::max(K_, o.K_));
    for (std::size_t i = 0; i < comps_.size(); ++i) out.comps_[i] -= o.comps_[i];
    return out;
}

Form Form::operator*(double s) const {
    Form out = *this;
    for (auto& c : out.comps_) c *= s;
    return out;
}

Form wedge(const Form& a, const Form& b) {
    const int deg = a.degree() + b.degree();
    if (deg > 3) throw std::invalid_argument("wedge: degree overflow (deg > 3)");
    const int K = std::max(a.K(), b.K());
    const Form pa = a.promoted(K), pb = b.promoted(K);
    Form out(deg, K);
    std::vector<int> merged;
    for (int i = 0; i < pa.component_count(); ++i) {
        for (int j = 0; j < pb.component_count(); ++j) {
            const int sign = merge_sign(Form::component_index(a.degree(), i),
                                        Form::component_index(b.degree(), j), merged);
            if (sign == 0) continue;
            auto prod = kernels::multiply(pa.comp(i), pb.comp(j), K);
            const int pos = Form::component_position(deg, merged);
            if (sign < 0) prod.field *= -1.0;
            out.comp(pos) += prod.field;
        }
    }
    return out;
}

Form exterior_derivative(const Form& a) {
    const int deg = a.degree();
    const int K = a.K();
    switch (deg) {
        case 0: {
            Form out(1, K);
            for (int ax = 0; ax < 3; ++ax) out.comp(ax) = a.comp(0).derivative(ax);
            return out;
        }
        case 1: {
            Form out(2, K);
            out.comp(0) = a.comp(1).derivative(0) - a.comp(0).derivative(1);  // xy
            out.comp(1) = a.comp(2).derivative(0) - a.comp(0).derivative(2);  // xt
            out.comp(2) = a.comp(2).derivative(1) - a.comp(1).derivative(2);  // yt
            return out;
        }
        case 2: {
            Form out(3, K);
            out.comp(0) = a.comp(2).derivative(0) - a.comp(1).derivative(1) +
                          a.comp(0).derivative(2);
            return out;
        }
        case 3:
            // N is 3-dimensional: no 4-forms, d of a top form is the zero 4-form.
            return Form(4, K);
        default:
            throw std::invalid_argument("exterior_derivative: bad degree");
    }
}

double integrate_fundamental(const Form& a) {
    if (a.degree() != 3)
        throw std::invalid_argument("integrate_fundamental: need a 3-form");
    return a.comp(0).mean();
}

double integrate_over_cycle(const Form& a, Cycle c) {
    if (a.degree() != cycle_dimension(c))
        throw std::invalid_argument("integrate_over_cycle: degree != cycle dimension");
    // Component carrying the cycle, directions spanned, orientation sign.
    int comp_pos = 0;
    std::array<bool, 3> along{false, false, false};
    double sign = 1.0;
    switch (c) {
        case Cycle::X: comp_pos = 0; along = {true, false, false}; break;
        case Cycle::Y: comp_pos = 1; along = {false, true, false}; break;
        case Cycle::Theta: comp_pos = 2; along = {false, false, true}; break;
        case Cycle::YTheta: comp_pos = 2; along = {false, true, true}; break;       // yt
        case Cycle::ThetaX: comp_pos = 1; along = {true, false, true}; sign = -1.0; break;  // dt^dx = -(dx^dt)
        case Cycle::XY: comp_pos = 0; along = {true, true, false}; break;           // xy
    }
    const ScalarField& f = a.comp(comp_pos);
    Complex acc(0, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Freq3 k = f.freq_at(i);
        bool keep = true;
        for (int ax = 0; ax < 3; ++ax)
            if (along[ax] && k[ax] != 0) keep = false;
        if (keep) acc += f.data()[i];
    }
    return sign * acc.real();
}

std::array<double, 3> periods_b1(const Form& a) {
    return {integrate_over_cycle(a, Cycle::X), integrate_over_cycle(a, Cycle::Y),
            integrate_over_cycle(a, Cycle::Theta)};
}

std::array<double, 3> periods_b2(const Form& a) {
    return {integrate_over_cycle(a, Cycle::YTheta),
            integrate_over_cycle(a, Cycle::ThetaX),
            integrate_over_cycle(a, Cycle::XY)};
}

}  // namespace sympform
