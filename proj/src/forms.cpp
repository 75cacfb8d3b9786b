#include "cohomdet/forms.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "cohomdet/errors.hpp"

namespace cohomdet {

namespace {

bool negates(std::int64_t x, std::int64_t y) {
    return static_cast<__int128>(x) + static_cast<__int128>(y) == 0;
}

std::string triple(int i, int j, int k) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

std::string shape_text(const std::vector<int>& shape) {
    std::string s;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) s += 'x';
        s += std::to_string(shape[i]);
    }
    return s;
}

void expect_shape(const IntTensor& t, const std::vector<int>& shape, const char* kind) {
    if (t.shape() != shape) {
        throw DimensionError(std::string(kind) + " tensor must be " + shape_text(shape) + ", got " +
                             shape_text(t.shape()));
    }
}

std::vector<int> massey_shape(int n, int m) {
    std::vector<int> shape(static_cast<std::size_t>(m + 2), n);
    shape[0] = n - 1;
    return shape;
}

void check_rank(int n, int min_rank, const char* kind) {
    if (n < min_rank || n > IntPoly::max_vars) {
        throw DimensionError(std::string(kind) + " form rank must lie in [" +
                             std::to_string(min_rank) + ", " + std::to_string(IntPoly::max_vars) +
                             "], got " + std::to_string(n));
    }
}

void check_bases(const BasisPair& bases, int rank_a, int rank_b) {
    if (bases.a().rows() != rank_a || bases.b().rows() != rank_b) {
        throw DimensionError("bases have sizes " + std::to_string(bases.a().rows()) + " and " +
                             std::to_string(bases.b().rows()) + ", expected " +
                             std::to_string(rank_a) + " and " + std::to_string(rank_b));
    }
}

// Linear form sum_k row[k] e_k^* for a coefficient vector of length n.
IntPoly linear_from(const std::vector<mpz_class>& row) { return IntPoly::linear(row); }

}  // namespace

IntTensor::IntTensor(std::vector<int> shape) : shape_(std::move(shape)) {
    std::size_t total = 1;
    for (int s : shape_) {
        if (s < 0) throw DimensionError("negative tensor extent");
        total *= static_cast<std::size_t>(s);
    }
    values_.assign(total, 0);
}

IntTensor::IntTensor(std::vector<int> shape, std::vector<std::int64_t> values) : IntTensor(std::move(shape)) {
    if (values.size() != values_.size()) {
        throw DimensionError("tensor of shape " + shape_text(shape_) + " needs " +
                             std::to_string(values_.size()) + " values, got " +
                             std::to_string(values.size()));
    }
    values_ = std::move(values);
}

std::size_t IntTensor::offset(std::span<const int> idx) const {
    if (idx.size() != shape_.size()) throw DimensionError("tensor index has the wrong order");
    std::size_t off = 0;
    for (std::size_t d = 0; d < idx.size(); ++d) {
        if (idx[d] < 0 || idx[d] >= shape_[d]) throw DimensionError("tensor index out of range");
        off = off * static_cast<std::size_t>(shape_[d]) + static_cast<std::size_t>(idx[d]);
    }
    return off;
}

std::vector<int> IntTensor::unravel(std::size_t flat) const {
    std::vector<int> idx(shape_.size());
    for (std::size_t d = shape_.size(); d-- > 0;) {
        idx[d] = static_cast<int>(flat % static_cast<std::size_t>(shape_[d]));
        flat /= static_cast<std::size_t>(shape_[d]);
    }
    return idx;
}

ClosedForm validate_closed(IntTensor tensor, int n) {
    check_rank(n, 3, "closed");
    expect_shape(tensor, {n, n, n}, "closed");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const std::int64_t v = tensor.at(i, j, k);
                if (i == j || j == k || i == k) {
                    if (v != 0) {
                        throw ValidationError("not alternating: f" + triple(i, j, k) + " = " +
                                              std::to_string(v) + " has a repeated index");
                    }
                    continue;
                }
                if (!negates(v, tensor.at(j, i, k))) {
                    throw ValidationError("not alternating: f" + triple(i, j, k) + " = " +
                                          std::to_string(v) + " but f" + triple(j, i, k) + " = " +
                                          std::to_string(tensor.at(j, i, k)));
                }
                if (!negates(v, tensor.at(i, k, j))) {
                    throw ValidationError("not alternating: f" + triple(i, j, k) + " = " +
                                          std::to_string(v) + " but f" + triple(i, k, j) + " = " +
                                          std::to_string(tensor.at(i, k, j)));
                }
            }
    return ClosedForm(n, std::move(tensor));
}

BoundaryForm validate_boundary(IntTensor tensor, int n) {
    check_rank(n, 2, "boundary");
    expect_shape(tensor, {n - 1, n, n}, "boundary");
    for (int x = 0; x < n - 1; ++x)
        for (int j = 0; j < n; ++j)
            for (int k = j; k < n; ++k) {
                const std::int64_t v = tensor.at(x, j, k);
                if (j == k) {
                    if (v != 0) {
                        throw ValidationError("not skew: f" + triple(x, j, k) + " = " +
                                              std::to_string(v) + " on the diagonal");
                    }
                } else if (!negates(v, tensor.at(x, k, j))) {
                    throw ValidationError("not skew: f" + triple(x, j, k) + " = " +
                                          std::to_string(v) + " but f" + triple(x, k, j) + " = " +
                                          std::to_string(tensor.at(x, k, j)));
                }
            }
    return BoundaryForm(n, std::move(tensor));
}

std::vector<IntPoly> massey_f0(const IntTensor& tensor, int n, int m) {
    check_rank(n, 2, "Massey");
    if (m < 1) throw DimensionError("Massey order m must be at least 1");
    expect_shape(tensor, massey_shape(n, m), "Massey");

    const std::size_t block = tensor.size() / static_cast<std::size_t>(n - 1);
    std::vector<IntPoly> out;
    out.reserve(static_cast<std::size_t>(n - 1));
    std::vector<int> tail(static_cast<std::size_t>(m + 1), 0);
    for (int x = 0; x < n - 1; ++x) {
        std::vector<std::pair<std::vector<int>, mpz_class>> terms;
        std::fill(tail.begin(), tail.end(), 0);
        for (std::size_t s = 0; s < block; ++s) {
            const std::int64_t v = tensor.values()[static_cast<std::size_t>(x) * block + s];
            if (v != 0) {
                std::vector<int> exps(static_cast<std::size_t>(n), 0);
                for (int i : tail) ++exps[static_cast<std::size_t>(i)];
                terms.emplace_back(std::move(exps), mpz_class(static_cast<long>(v)));
            }
            // odometer over the last m+1 slots
            for (std::size_t d = tail.size(); d-- > 0;) {
                if (++tail[d] < n) break;
                tail[d] = 0;
            }
        }
        out.push_back(IntPoly::from_terms(n, terms));
    }
    return out;
}

MasseyForm validate_massey(IntTensor tensor, int n, int m) {
    const auto f0 = massey_f0(tensor, n, m);
    for (std::size_t x = 0; x < f0.size(); ++x) {
        if (!f0[x].is_zero()) {
            throw ValidationError("f0 does not vanish: f0(b" + std::to_string(x + 1) + ") = " +
                                  f0[x].to_string());
        }
    }
    return MasseyForm(n, m, std::move(tensor));
}

PolyMatrix build_theta_closed(const ClosedForm& f, const BasisPair& bases) {
    const int n = f.n();
    check_bases(bases, n, n);
    const IntMatrix& a = bases.a();
    const IntMatrix& b = bases.b();

    // h[i][q][k] = f(a_i, e_q, e_k)
    std::vector<mpz_class> h(static_cast<std::size_t>(n) * n * n);
    auto hat = [&](int i, int q, int k) -> mpz_class& {
        return h[(static_cast<std::size_t>(i) * n + q) * n + k];
    };
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < n; ++p) {
            if (a(i, p) == 0) continue;
            for (int q = 0; q < n; ++q)
                for (int k = 0; k < n; ++k) {
                    const std::int64_t v = f(p, q, k);
                    if (v) hat(i, q, k) += a(i, p) * static_cast<long>(v);
                }
        }

    PolyMatrix theta(n, n, n);
    std::vector<mpz_class> row(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                row[k] = 0;
                for (int q = 0; q < n; ++q) row[k] += b(j, q) * hat(i, q, k);
            }
            theta.set(i, j, linear_from(row));
        }
    return theta;
}

PolyMatrix build_theta_boundary(const BoundaryForm& f, const BasisPair& bases) {
    const int n = f.n();
    check_bases(bases, n, n - 1);
    const IntMatrix& a = bases.a();
    const IntMatrix& b = bases.b();

    // h[i][p][k] = f(b_i, e_p, e_k)
    std::vector<mpz_class> h(static_cast<std::size_t>(n - 1) * n * n);
    auto hat = [&](int i, int p, int k) -> mpz_class& {
        return h[(static_cast<std::size_t>(i) * n + p) * n + k];
    };
    for (int i = 0; i < n - 1; ++i)
        for (int x = 0; x < n - 1; ++x) {
            if (b(i, x) == 0) continue;
            for (int p = 0; p < n; ++p)
                for (int k = 0; k < n; ++k) {
                    const std::int64_t v = f(x, p, k);
                    if (v) hat(i, p, k) += b(i, x) * static_cast<long>(v);
                }
        }

    PolyMatrix theta(n - 1, n, n);
    std::vector<mpz_class> row(static_cast<std::size_t>(n));
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                row[k] = 0;
                for (int p = 0; p < n; ++p) row[k] += a(j, p) * hat(i, p, k);
            }
            theta.set(i, j, linear_from(row));
        }
    return theta;
}

PolyMatrix build_theta_massey(const MasseyForm& f, const BasisPair& bases) {
    const int n = f.n();
    const int m = f.m();
    check_bases(bases, n, n - 1);
    const IntMatrix& a = bases.a();
    const IntMatrix& b = bases.b();
    const IntTensor& t = f.tensor();

    // g_std[x][p] = sum over k_1..k_m of f(b_x, e_p, e_{k_1}, ..., e_{k_m}) e_{k_1}^* ... e_{k_m}^*
    std::size_t block = 1;
    for (int s = 0; s < m; ++s) block *= static_cast<std::size_t>(n);
    std::vector<IntPoly> g_std;
    g_std.reserve(static_cast<std::size_t>(n - 1) * n);
    std::vector<int> tail(static_cast<std::size_t>(m));
    for (int x = 0; x < n - 1; ++x)
        for (int p = 0; p < n; ++p) {
            const std::size_t base = (static_cast<std::size_t>(x) * n + p) * block;
            std::vector<std::pair<std::vector<int>, mpz_class>> terms;
            std::fill(tail.begin(), tail.end(), 0);
            for (std::size_t s = 0; s < block; ++s) {
                const std::int64_t v = t.values()[base + s];
                if (v != 0) {
                    std::vector<int> exps(static_cast<std::size_t>(n), 0);
                    for (int k : tail) ++exps[static_cast<std::size_t>(k)];
                    terms.emplace_back(std::move(exps), mpz_class(static_cast<long>(v)));
                }
                for (std::size_t d = tail.size(); d-- > 0;) {
                    if (++tail[d] < n) break;
                    tail[d] = 0;
                }
            }
            g_std.push_back(IntPoly::from_terms(n, terms));
        }

    // g(b_i, e_p), then g(b_i, a_j)
    std::vector<IntPoly> h(static_cast<std::size_t>(n - 1) * n, IntPoly(n));
    for (int i = 0; i < n - 1; ++i)
        for (int x = 0; x < n - 1; ++x) {
            if (b(i, x) == 0) continue;
            for (int p = 0; p < n; ++p)
                h[static_cast<std::size_t>(i) * n + p] += g_std[static_cast<std::size_t>(x) * n + p] * b(i, x);
        }

    PolyMatrix theta(n - 1, n, n);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n; ++j) {
            IntPoly entry(n);
            for (int p = 0; p < n; ++p)
                if (a(j, p) != 0) entry += h[static_cast<std::size_t>(i) * n + p] * a(j, p);
            theta.set(i, j, std::move(entry));
        }
    return theta;
}

int form_rank(const Form& f) {
    return std::visit([](const auto& form) { return form.n(); }, f);
}

}  // namespace cohomdet
