#pragma once

// Reverse-mode differentiation over an explicit, single-use tape.
//
// Every op appends its output as a tape slot. When at least one input requires
// a gradient, the op also records a backward closure; backward() replays those
// closures in reverse order exactly once. Leaves borrow their storage, so a
// parameter tensor must outlive any tape that references it.

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "arfoley/tensor.hpp"

namespace arfoley {

enum class OpKind : std::uint8_t {
    leaf,
    constant,
    matmul,
    matmul_nt,
    add,
    scale,
    softmax,
    causal_softmax,
    layer_norm,
    gelu,
    embedding,
    cross_entropy,
    concat_last,
    concat_rows,
    slice_cols,
    gather_rows,
    rope,
    sum,
};

const char* op_name(OpKind k);

struct Var {
    std::uint32_t id = std::numeric_limits<std::uint32_t>::max();
    bool valid() const { return id != std::numeric_limits<std::uint32_t>::max(); }
};

template <typename T>
class Tape {
public:
    // Receives the tape and the op's output slot.
    using BackwardFn = std::function<void(Tape&, Var)>;

    struct Record {
        OpKind op;
        std::vector<Var> inputs;
        Var output;
        BackwardFn backward;
    };

    Var leaf(const Tensor<T>& value, bool requires_grad = true);
    Var constant(Tensor<T> value);

    const Tensor<T>& value(Var v) const;
    // Throws if the slot never received a gradient.
    const Tensor<T>& grad(Var v) const;
    bool has_grad(Var v) const;
    bool requires_grad(Var v) const { return slot(v).requires_grad; }

    void backward(Var loss);
    bool consumed() const { return consumed_; }

    std::size_t slot_count() const { return slots_.size(); }
    const std::vector<Record>& records() const { return records_; }

    // Op-author interface.
    Var push(OpKind op, std::vector<Var> inputs, Tensor<T> out, BackwardFn fn);
    Tensor<T>& grad_mut(Var v);  // zero-initialised on first touch
    bool any_requires_grad(std::span<const Var> vs) const;

private:
    struct Slot {
        Tensor<T> owned;
        const Tensor<T>* borrowed = nullptr;
        Tensor<T> grad;
        bool requires_grad = false;
        bool grad_live = false;
    };

    const Slot& slot(Var v) const;
    Slot& slot(Var v);

    std::vector<Slot> slots_;
    std::vector<Record> records_;
    bool consumed_ = false;
};

extern template class Tape<float>;
extern template class Tape<double>;

namespace ops {

// a: [..., K] viewed as rows x K; b: [K, N]
template <typename T> Var matmul(Tape<T>& t, Var a, Var b);
// a: rows x K; b: [N, K]; returns a * b^T
template <typename T> Var matmul_nt(Tape<T>& t, Var a, Var b);
// Same-shape elementwise, or b of rank 1 broadcast over rows of a.
template <typename T> Var add(Tape<T>& t, Var a, Var b);
template <typename T> Var scale(Tape<T>& t, Var a, T s);
template <typename T> Var softmax(Tape<T>& t, Var a);
// Row i attends to columns [0, offset + i]; the rest are exactly zero.
template <typename T> Var causal_softmax(Tape<T>& t, Var a, std::size_t offset = 0);
template <typename T> Var layer_norm(Tape<T>& t, Var x, Var gamma, Var beta, T eps = T(1e-5));
template <typename T> Var gelu(Tape<T>& t, Var a);
template <typename T> Var embedding(Tape<T>& t, Var table, std::span<const int> ids);
// Mean cross-entropy over rows whose target is >= 0; target -1 is ignored.
template <typename T> Var cross_entropy(Tape<T>& t, Var logits, std::span<const int> targets);
template <typename T> Var concat_last(Tape<T>& t, std::span<const Var> parts);
template <typename T> Var concat_rows(Tape<T>& t, std::span<const Var> parts);
template <typename T> Var slice_cols(Tape<T>& t, Var a, std::size_t start, std::size_t width);
template <typename T> Var gather_rows(Tape<T>& t, Var a, std::span<const int> rows);
// Rotary embedding on consecutive pairs within each head; positions may be negative.
template <typename T>
Var rope(Tape<T>& t, Var x, std::span<const int> positions, std::size_t n_heads, T base = T(10000));
template <typename T> Var sum(Tape<T>& t, Var a);

}  // namespace ops

// Builds a scalar loss on a fresh double-precision tape from leaves bound to `params`.
using ScalarGraph = std::function<Var(Tape<double>&, std::span<const Var>)>;

struct GradCheckResult {
    double max_rel_error = 0.0;
    std::size_t worst_param = 0;
    std::size_t worst_index = 0;
};

// Compares analytic gradients against central differences with step h. The
// error of one parameter tensor is |analytic - cdiff| / (|analytic| + |cdiff| + 1e-8)
// with Euclidean norms over its elements; the result is the max over tensors.
// worst_index is the element with the largest absolute discrepancy.
GradCheckResult finite_diff_check(const ScalarGraph& f, std::vector<DTensor>& params, double h);

}  // namespace arfoley
