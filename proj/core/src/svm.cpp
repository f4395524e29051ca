#include "glare/svm.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "glare/errors.hpp"

namespace glare {

namespace {

constexpr long kMaxPairUpdates = 1'000'000;
constexpr double kAlphaEpsilon = 1e-12; // below this an example is not a support vector

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

double gaussian_kernel(const FeatureVector& a, const FeatureVector& b, double gamma) {
    double sq = 0.0;
    for (int i = 0; i < kFeatureCount; ++i) {
        double d = a[i] - b[i];
        sq += d * d;
    }
    return std::exp(-gamma * sq);
}

SvmModel svm_train(const std::vector<TrainingExample>& examples, double c, double gamma,
                   double tol, uint64_t /*seed*/) {
    if (!(c > 0.0) || !(gamma > 0.0) || !(tol > 0.0)) {
        throw UsageError("svm_train: c, gamma and tol must all be positive");
    }
    const int n = static_cast<int>(examples.size());
    bool has_pos = false, has_neg = false;
    for (const auto& ex : examples) {
        (ex.label == SpaceChoice::Rgb ? has_pos : has_neg) = true;
    }
    if (!has_pos || !has_neg) {
        throw TrainingError("svm_train: training set must contain both labels", 0.0);
    }

    std::vector<FeatureVector> raw(n);
    for (int i = 0; i < n; ++i) raw[i] = examples[i].features;
    FeatureNormalizer normalizer = fit_normalizer(raw);

    std::vector<FeatureVector> x(n);
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) {
        x[i] = normalizer.apply(examples[i].features);
        y[i] = label_sign(examples[i].label);
    }

    // Full kernel matrix; datasets here are frame-level (hundreds, not millions).
    std::vector<double> kern(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        kern[static_cast<size_t>(i) * n + i] = 1.0;
        for (int j = i + 1; j < n; ++j) {
            double v = gaussian_kernel(x[i], x[j], gamma);
            kern[static_cast<size_t>(i) * n + j] = v;
            kern[static_cast<size_t>(j) * n + i] = v;
        }
    }
    auto K = [&kern, n](int i, int j) { return kern[static_cast<size_t>(i) * n + j]; };

    std::vector<double> alpha(n, 0.0);
    // g_base[i] = sum_j alpha_j y_j K(i,j): the decision value at x_i without bias.
    std::vector<double> g_base(n, 0.0);

    double violation = std::numeric_limits<double>::infinity();
    bool converged = false;

    for (long iter = 0; iter < kMaxPairUpdates; ++iter) {
        // Max-violating pair: i maximizes y_t - g_base[t] over I_up,
        // j minimizes it over I_low.
        int i = -1, j = -1;
        double m_up = -std::numeric_limits<double>::infinity();
        double m_low = std::numeric_limits<double>::infinity();
        for (int t = 0; t < n; ++t) {
            bool in_up = (y[t] > 0 && alpha[t] < c) || (y[t] < 0 && alpha[t] > 0.0);
            bool in_low = (y[t] < 0 && alpha[t] < c) || (y[t] > 0 && alpha[t] > 0.0);
            double v = y[t] - g_base[t];
            if (in_up && v > m_up) {
                m_up = v;
                i = t;
            }
            if (in_low && v < m_low) {
                m_low = v;
                j = t;
            }
        }
        if (i < 0 || j < 0) break; // cannot happen with both classes present
        violation = m_up - m_low;
        if (violation <= tol) {
            converged = true;
            break;
        }

        double eta = K(i, i) + K(j, j) - 2.0 * K(i, j);
        if (eta < 1e-12) eta = 1e-12;
        double delta = violation / eta;

        // Step alpha_i += y_i*delta, alpha_j -= y_j*delta keeps sum(alpha.*y)
        // constant; project back into the box preserving that sum exactly.
        double old_ai = alpha[i], old_aj = alpha[j];
        double pair_sum = y[i] * old_ai + y[j] * old_aj;
        double ai = old_ai + y[i] * delta;
        if (ai < 0.0) ai = 0.0;
        if (ai > c) ai = c;
        double aj = y[j] * (pair_sum - y[i] * ai);
        if (aj < 0.0) {
            aj = 0.0;
            ai = y[i] * (pair_sum - y[j] * aj);
        } else if (aj > c) {
            aj = c;
            ai = y[i] * (pair_sum - y[j] * aj);
        }
        alpha[i] = ai;
        alpha[j] = aj;

        double di = y[i] * (ai - old_ai);
        double dj = y[j] * (aj - old_aj);
        for (int t = 0; t < n; ++t) {
            g_base[t] += di * K(i, t) + dj * K(j, t);
        }
    }

    if (!converged) {
        throw TrainingError("svm_train: no convergence after " + std::to_string(kMaxPairUpdates) +
                                " pair updates, KKT violation " + fmt17(violation),
                            violation);
    }

    // Bias from averaged KKT conditions over unbounded (0 < alpha < c)
    // support vectors; midpoint of the violation interval if none exist.
    double bias;
    int free_count = 0;
    double free_sum = 0.0;
    for (int t = 0; t < n; ++t) {
        if (alpha[t] > 0.0 && alpha[t] < c) {
            free_sum += y[t] - g_base[t];
            ++free_count;
        }
    }
    if (free_count > 0) {
        bias = free_sum / free_count;
    } else {
        double m_up = -std::numeric_limits<double>::infinity();
        double m_low = std::numeric_limits<double>::infinity();
        for (int t = 0; t < n; ++t) {
            bool in_up = (y[t] > 0 && alpha[t] < c) || (y[t] < 0 && alpha[t] > 0.0);
            bool in_low = (y[t] < 0 && alpha[t] < c) || (y[t] > 0 && alpha[t] > 0.0);
            double v = y[t] - g_base[t];
            if (in_up) m_up = std::max(m_up, v);
            if (in_low) m_low = std::min(m_low, v);
        }
        bias = 0.5 * (m_up + m_low);
    }

    SvmModel model;
    model.gamma = gamma;
    model.c = c;
    model.bias = bias;
    model.normalizer = normalizer;
    for (int t = 0; t < n; ++t) {
        if (std::abs(alpha[t]) > kAlphaEpsilon) {
            model.support_vectors.push_back(x[t]);
            model.coefficients.push_back(alpha[t] * y[t]);
        }
    }
    return model;
}

SvmPrediction svm_predict(const SvmModel& model, const FeatureVector& raw_features) {
    FeatureVector x = model.normalizer.apply(raw_features);
    double decision = model.bias;
    for (size_t i = 0; i < model.support_vectors.size(); ++i) {
        decision += model.coefficients[i] * gaussian_kernel(model.support_vectors[i], x, model.gamma);
    }
    SvmPrediction p;
    p.decision_value = decision;
    p.label = decision > 0.0 ? SpaceChoice::Rgb : SpaceChoice::Hsv;
    return p;
}

void save_model(const SvmModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary); // binary: no newline translation
    if (!out) throw DataError("cannot open " + path.string() + " for writing");
    out << "svmmodel v1\n";
    out << "gamma " << fmt17(model.gamma) << "\n";
    out << "c " << fmt17(model.c) << "\n";
    out << "bias " << fmt17(model.bias) << "\n";
    out << "norm";
    for (int i = 0; i < kFeatureCount; ++i) out << " " << fmt17(model.normalizer.mean[i]);
    for (int i = 0; i < kFeatureCount; ++i) out << " " << fmt17(model.normalizer.std[i]);
    out << "\n";
    out << "nsv " << model.support_vectors.size() << "\n";
    for (size_t i = 0; i < model.support_vectors.size(); ++i) {
        out << fmt17(model.coefficients[i]);
        for (int k = 0; k < kFeatureCount; ++k) out << " " << fmt17(model.support_vectors[i][k]);
        out << "\n";
    }
    if (!out) throw DataError("write failed: " + path.string());
}

namespace {

class ModelReader {
public:
    explicit ModelReader(const std::filesystem::path& path) : in_(path), path_(path) {
        if (!in_) throw DataError("cannot open " + path.string());
    }

    std::string next_line() {
        std::string line;
        if (!std::getline(in_, line)) {
            throw ParseError(path_.string() + ": unexpected end of model file", line_no_ + 1);
        }
        ++line_no_;
        return line;
    }

    int line_no() const { return line_no_; }
    const std::filesystem::path& path() const { return path_; }

private:
    std::ifstream in_;
    std::filesystem::path path_;
    int line_no_ = 0;
};

double parse_double(ModelReader& r, std::istringstream& s, const char* what) {
    double v;
    if (!(s >> v)) {
        throw ParseError(r.path().string() + ": expected " + what, r.line_no());
    }
    return v;
}

void expect_keyword(ModelReader& r, std::istringstream& s, const std::string& keyword) {
    std::string word;
    if (!(s >> word) || word != keyword) {
        throw ParseError(r.path().string() + ": expected '" + keyword + "'", r.line_no());
    }
}

} // namespace

SvmModel load_model(const std::filesystem::path& path) {
    ModelReader r(path);

    if (r.next_line() != "svmmodel v1") {
        throw ParseError(path.string() + ": bad header, expected 'svmmodel v1'", 1);
    }

    SvmModel model;
    {
        std::istringstream s(r.next_line());
        expect_keyword(r, s, "gamma");
        model.gamma = parse_double(r, s, "gamma value");
    }
    {
        std::istringstream s(r.next_line());
        expect_keyword(r, s, "c");
        model.c = parse_double(r, s, "c value");
    }
    {
        std::istringstream s(r.next_line());
        expect_keyword(r, s, "bias");
        model.bias = parse_double(r, s, "bias value");
    }
    {
        std::istringstream s(r.next_line());
        expect_keyword(r, s, "norm");
        for (int i = 0; i < kFeatureCount; ++i) {
            model.normalizer.mean[i] = parse_double(r, s, "normalizer mean");
        }
        for (int i = 0; i < kFeatureCount; ++i) {
            model.normalizer.std[i] = parse_double(r, s, "normalizer std");
        }
    }
    long nsv;
    {
        std::istringstream s(r.next_line());
        expect_keyword(r, s, "nsv");
        if (!(s >> nsv) || nsv < 0) {
            throw ParseError(path.string() + ": expected support vector count", r.line_no());
        }
    }
    for (long i = 0; i < nsv; ++i) {
        std::istringstream s(r.next_line());
        double coef = parse_double(r, s, "support vector coefficient");
        FeatureVector sv{};
        for (int k = 0; k < kFeatureCount; ++k) {
            sv[k] = parse_double(r, s, "support vector feature");
        }
        model.coefficients.push_back(coef);
        model.support_vectors.push_back(sv);
    }

    if (!(model.gamma > 0.0)) {
        throw ParseError(path.string() + ": gamma must be positive", 2);
    }
    return model;
}

} // namespace glare
