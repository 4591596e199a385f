// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACL1_MESH_HPP
#define FRACL1_MESH_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace fracl1 {

// Uniform time mesh t_k = k*h, k = 0..n_steps.
struct UniformMesh {
    double h;
    std::int64_t n_steps;
    double final_time;

    UniformMesh(double h, std::int64_t n_steps);

    double t(std::int64_t k) const { return static_cast<double>(k) * h; }
};

// Samples y_k = y(t_k) on a uniform mesh; samples.size() == n_steps + 1.
struct GridFunction {
    UniformMesh mesh;
    std::vector<double> samples;

    GridFunction(const UniformMesh& mesh, std::vector<double> samples);
};

GridFunction sample_on_mesh(const std::function<double(double)>& y,
                            const UniformMesh& mesh);

} // namespace fracl1

#endif
