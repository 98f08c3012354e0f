# Copyright 2026 The milc-simd Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes frozen_cases.hpp: fixed random operands and the expected result of
every routine, computed with numpy in extended precision and rounded once to
double.  Independent of the C++ sources; rerun only to regenerate."""

import sys

import numpy as np

rng = np.random.default_rng(20260401)
CT = np.clongdouble


def draw(shape):
    re = rng.uniform(-1.0, 1.0, shape)
    im = rng.uniform(-1.0, 1.0, shape)
    return re, im


def cplx(parts):
    re, im = parts
    return re.astype(np.longdouble) + 1j * im.astype(np.longdouble)


inputs = {
    "a": draw((3, 3)),
    "b": draw((3, 3)),
    "a4": draw((4, 3, 3)),
    "u": draw((3,)),
    "w": draw((3,)),
    "v4": draw((4, 3)),
    "h": draw((2, 3)),
}
s = float(rng.uniform(-1.0, 1.0))

A = cplx(inputs["a"]).astype(CT)
B = cplx(inputs["b"]).astype(CT)
A4 = cplx(inputs["a4"]).astype(CT)
U = cplx(inputs["u"]).astype(CT)
W = cplx(inputs["w"]).astype(CT)
V4 = cplx(inputs["v4"]).astype(CT)
H = cplx(inputs["h"]).astype(CT)
S = np.longdouble(s)


def adj(m):
    return np.conj(m).T


def mv(m, v):
    return np.array([sum(m[i, j] * v[j] for j in range(3)) for i in range(3)], dtype=CT)


def mm(x, y):
    return np.array([[sum(x[i, j] * y[j, k] for j in range(3)) for k in range(3)]
                     for i in range(3)], dtype=CT)


expected = {
    "add_su3_vector": [U + W],
    "mult_adj_su3_mat_hwvec": [mv(adj(A), H[0]), mv(adj(A), H[1])],
    "mult_adj_su3_mat_vec": [mv(adj(A), U)],
    "mult_adj_su3_mat_vec_4dir": [mv(adj(A4[d]), U) for d in range(4)],
    "mult_adj_su3_mat_4vec": [mv(adj(A4[d]), U) for d in range(4)],
    "mult_su3_an": [mm(adj(A), B)],
    "mult_su3_mat_hwvec": [mv(A, H[0]), mv(A, H[1])],
    "mult_su3_na": [mm(A, adj(B))],
    "mult_su3_nn": [mm(A, B)],
    "mult_su3_mat_vec": [mv(A, U)],
    "mult_su3_mat_vec_sum_4dir": [sum(mv(A4[d], V4[d]) for d in range(4))],
    "scalar_mult_add_su3_matrix": [A + S * B],
    "scalar_mult_add_su3_vector": [U + S * W],
    "su3_projector": [np.outer(U, np.conj(W))],
    "sub_four_su3_vecs": [U - V4[0] - V4[1] - V4[2] - V4[3]],
}


def flat_parts(parts):
    re, im = parts
    out = []
    for r, i in zip(np.ravel(re), np.ravel(im)):
        out += [float(r), float(i)]
    return out


def flat_complex(blocks):
    out = []
    for blk in blocks:
        for z in np.ravel(blk):
            out += [float(np.real(z)), float(np.imag(z))]
    return out


def literal(values):
    return ",\n    ".join(", ".join(repr(v) for v in values[k:k + 2])
                          for k in range(0, len(values), 2))


lines = [
    "// Generated by gen_frozen_cases.py; do not edit.",
    "// Operands and expected results of one random case per routine.",
    "// Flattening follows verify::run_routine.",
    "",
    "#ifndef MILC_TESTS_SUPPORT_FROZEN_CASES_HPP_",
    "#define MILC_TESTS_SUPPORT_FROZEN_CASES_HPP_",
    "",
    "#include <string_view>",
    "#include <vector>",
    "",
    "namespace frozen {",
    "",
]
for name, parts in inputs.items():
    vals = flat_parts(parts)
    lines.append(f"inline const std::vector<double> k_{name} = {{\n    {literal(vals)}}};")
lines.append(f"inline constexpr double k_s = {s!r};")
lines.append("")
lines.append("struct Expected {")
lines.append("  std::string_view routine;")
lines.append("  std::vector<double> values;")
lines.append("};")
lines.append("")
lines.append("inline const std::vector<Expected> kExpected = {")
for name, blocks in expected.items():
    lines.append(f"    {{\"{name}\",\n     {{{literal(flat_complex(blocks))}}}}},")
lines.append("};")
lines.append("")
lines.append("}  // namespace frozen")
lines.append("")
lines.append("#endif  // MILC_TESTS_SUPPORT_FROZEN_CASES_HPP_")

header = open(sys.argv[1]).read() if len(sys.argv) > 1 else ""
sys.stdout.write(header + "\n".join(lines) + "\n")
