// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#include "fracl1/mesh.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace fracl1 {

UniformMesh::UniformMesh(double h, std::int64_t n_steps)
    : h(h), n_steps(n_steps), final_time(h * static_cast<double>(n_steps))
{
    if (!(h > 0.0) || !std::isfinite(h))
        throw std::domain_error("UniformMesh: h must be positive and finite");
    if (n_steps < 1)
        throw std::domain_error("UniformMesh: n_steps must be >= 1");
}

GridFunction::GridFunction(const UniformMesh& mesh, std::vector<double> samples)
    : mesh(mesh), samples(std::move(samples))
{
    if (this->samples.size() != static_cast<std::size_t>(mesh.n_steps) + 1)
        throw std::invalid_argument(
            "GridFunction: samples.size() must equal n_steps + 1");
    for (double v : this->samples)
        if (!std::isfinite(v))
            throw std::invalid_argument("GridFunction: non-finite sample");
}

GridFunction sample_on_mesh(const std::function<double(double)>& y,
                            const UniformMesh& mesh)
{
    std::vector<double> samples(static_cast<std::size_t>(mesh.n_steps) + 1);
    for (std::int64_t k = 0; k <= mesh.n_steps; ++k)
        samples[static_cast<std::size_t>(k)] = y(mesh.t(k));
    return GridFunction(mesh, std::move(samples));
}

} // namespace fracl1
