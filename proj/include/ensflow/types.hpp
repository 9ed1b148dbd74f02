/* Core domain types shared across the library: chain coordinates,
 * atom records, torsion features, contact maps and the error hierarchy. */
#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace ensflow {

// One conformation: ordered residue coordinates in Angstrom, one row per residue.
using Coords = Eigen::Matrix<double, Eigen::Dynamic, 3>;

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

struct InvalidInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg, std::size_t byte_offset = 0)
        : std::runtime_error(msg), offset(byte_offset) {}
    std::size_t offset;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UndefinedMetricError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PipelineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg, std::size_t line_number = 0)
        : std::runtime_error(msg), line(line_number) {}
    std::size_t line;
};

// One atom of one conformation. (residue_index, atom_name) unique per model.
struct AtomRecord {
    int residue_index = 0;
    std::string residue_name;  // 3-letter code
    std::string atom_name;     // N, CA, C, CB, gamma atom, ...
    Vec3 position = Vec3::Zero();
};

enum class TorsionKind : int { Phi = 0, Psi = 1, Chi1 = 2 };
inline constexpr int kNumTorsions = 3;

// Per-residue (sin, cos) pairs for phi/psi/chi1 with a defined-angle mask.
// Masked entries are exactly (0, 0); unmasked pairs are unit-norm.
struct TorsionFeatures {
    // n x 6 layout: [sin(phi), cos(phi), sin(psi), cos(psi), sin(chi1), cos(chi1)]
    Mat sin_cos;
    // n x 3 mask, column order phi, psi, chi1
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> mask;

    TorsionFeatures() = default;
    explicit TorsionFeatures(Eigen::Index n)
        : sin_cos(Mat::Zero(n, 2 * kNumTorsions)),
          mask(Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, kNumTorsions, false)) {}

    Eigen::Index size() const { return sin_cos.rows(); }
    bool empty() const { return sin_cos.rows() == 0; }
};

struct ContactMap {
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> contacts;
    double threshold = 7.0;       // Angstrom
    int min_sequence_separation = 3;

    Eigen::Index size() const { return contacts.rows(); }
};

inline void require_finite(const Coords& c, const char* what) {
    if (!c.allFinite()) {
        throw InvalidInputError(std::string(what) + ": non-finite coordinate");
    }
}

}  // namespace ensflow
