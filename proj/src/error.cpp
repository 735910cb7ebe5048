#include "cyclic_stab/error.hpp"

namespace cstab {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotAFactorization: return "NotAFactorization";
    case Errc::NotEquivariant: return "NotEquivariant";
    case Errc::NotClosed: return "NotClosed";
    case Errc::UnsupportedArity: return "UnsupportedArity";
    case Errc::UnknownExample: return "UnknownExample";
    case Errc::BrokenChain: return "BrokenChain";
    case Errc::NotLiftable: return "NotLiftable";
    case Errc::NotConnective: return "NotConnective";
    case Errc::NotSubdiagram: return "NotSubdiagram";
    case Errc::IdMismatch: return "IdMismatch";
    case Errc::ArrowSetMismatch: return "ArrowSetMismatch";
    case Errc::TrivialCharge: return "TrivialCharge";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::NotLocallyLiftable: return "NotLocallyLiftable";
    case Errc::MaslovObstruction: return "MaslovObstruction";
    case Errc::InvalidTriple: return "InvalidTriple";
    case Errc::NotDeformationEquivalent: return "NotDeformationEquivalent";
    case Errc::NoFiltration: return "NoFiltration";
    case Errc::InvalidBridgeland: return "InvalidBridgeland";
    case Errc::StepTooLarge: return "StepTooLarge";
    case Errc::ChargeVanished: return "ChargeVanished";
    case Errc::InexactEndpoint: return "InexactEndpoint";
    case Errc::LoopNotClosed: return "LoopNotClosed";
    case Errc::DocumentError: return "DocumentError";
    }
    return "Unknown";
}

Error::Error(Errc c, const std::string& msg)
    : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

}  // namespace cstab
