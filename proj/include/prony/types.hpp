#pragma once

#include <complex>

#include <Eigen/Core>

namespace prony {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using Index   = Eigen::Index;

/// Measurement vector m_0..m_{K-1}.
using MomentVector = CVector;

/// Point of C^r; repeated coordinates encode confluent nodes.
using NodeVector = CVector;

}  // namespace prony
