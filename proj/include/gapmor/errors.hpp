// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace gapmor {

enum class ErrorCode {
    SingularMatrix,
    DefectiveMatrix,
    ConvergenceFailure,
    SpectrumCollision,
    NotStabilizing,
    SubspaceDimension,
    DimensionMismatch,
    Unstable,
    NonzeroFeedthrough,
    UnstablePole,
    MirrorCollision,
    ImaginaryAxisPole,
    RankDeficient,
    ParseError,
    IoError,
    InvalidArgument,
};

inline const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::DefectiveMatrix: return "DefectiveMatrix";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::SpectrumCollision: return "SpectrumCollision";
        case ErrorCode::NotStabilizing: return "NotStabilizing";
        case ErrorCode::SubspaceDimension: return "SubspaceDimension";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::Unstable: return "Unstable";
        case ErrorCode::NonzeroFeedthrough: return "NonzeroFeedthrough";
        case ErrorCode::UnstablePole: return "UnstablePole";
        case ErrorCode::MirrorCollision: return "MirrorCollision";
        case ErrorCode::ImaginaryAxisPole: return "ImaginaryAxisPole";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Error type carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace gapmor
