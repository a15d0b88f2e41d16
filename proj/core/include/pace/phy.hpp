#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pace/scene.hpp"

namespace pace {

inline constexpr int kLdpcInfoBits = 3072;  // k
inline constexpr int kLdpcCodedBits = 6144; // n
inline constexpr int kCheckDegree = 6;
inline constexpr int kVarDegree = 3;

/// Rate-1/2 regular (3,6) LDPC code in systematic form: the first k
/// codeword bits are the info bits. Construction is seeded and
/// deterministic; the stored column order already places an invertible
/// parity block last.
struct LdpcCode {
    int k = kLdpcInfoBits;
    int n = kLdpcCodedBits;
    std::uint64_t seed = 0;

    // H adjacency. check_vars[i] lists the 6 variable columns of check i;
    // var_edges[v] lists the 3 flat edge ids (i * 6 + slot) touching v.
    std::vector<std::array<int, kCheckDegree>> check_vars;
    std::vector<std::array<int, kVarDegree>> var_edges;

    // Dense parity generator: parity = XOR of parity_cols[j] over info
    // bits j that are set. Each column holds n-k bits in 64-bit words.
    std::vector<std::vector<std::uint64_t>> parity_cols;

    int checks() const { return n - k; }
};

/// Seeded PEG-style construction: per variable, edges go to the lowest
/// degree check among those farthest (or unreachable) in the current
/// graph, capped at row weight 6. Retries with derived seeds until the
/// parity block is invertible.
LdpcCode build_ldpc_code(std::uint64_t seed, int k = kLdpcInfoBits, int n = kLdpcCodedBits);

/// Systematic encode; info_bits.size() must equal k. Returns n bits (0/1).
std::vector<std::uint8_t> ldpc_encode(const LdpcCode& code, std::span<const std::uint8_t> info_bits);

/// H * c^T == 0 check, used by tests and the decoder's early stop.
bool ldpc_syndrome_ok(const LdpcCode& code, std::span<const std::uint8_t> codeword);

enum class BpVariant { SumProduct, MinSumOffset };

struct LdpcDecodeResult {
    std::vector<std::uint8_t> info_bits;
    bool converged = false;
    int iterations = 0;
};

/// Belief propagation with syndrome-based early stop. LLR convention:
/// positive means bit 0. Non-convergence is reported, never thrown.
LdpcDecodeResult ldpc_decode(const LdpcCode& code, std::span<const double> llrs,
                             int max_iter = 50, BpVariant variant = BpVariant::SumProduct,
                             double min_sum_offset = 0.15);

// ---------------------------------------------------------------------------
// Modulation and channel

/// Gray-mapped 16-QAM, unit average symbol energy. Bit count must be a
/// multiple of 4; bits (b0 b1) select the I level, (b2 b3) the Q level.
std::vector<std::complex<double>> qam16_map(std::span<const std::uint8_t> bits);

/// Exact sum-exp bit LLRs (log P(b=0)/P(b=1)) given per-component noise
/// variance. Variances below 1e-12 hard-threshold to +/-kLlrSaturation.
std::vector<double> qam16_demap(std::span<const std::complex<double>> symbols,
                                double noise_variance_per_component);

inline constexpr double kLlrSaturation = 200.0;

/// Per-component noise variance for unit-energy symbols at Es/N0 = snr_db.
double awgn_noise_variance(double snr_db);

/// Circular complex AWGN, deterministic per seed. snr_db >= 300 is
/// treated as a noiseless channel so loopback tests can demand identity.
std::vector<std::complex<double>> add_awgn(std::span<const std::complex<double>> symbols,
                                           double snr_db, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Frame format and wire-cost model

inline constexpr char kFrameMagic[4] = {'P', 'A', 'C', 'E'};
inline constexpr std::uint8_t kFrameVersion = 1;
inline constexpr int kImageHeaderBytes = 11; // magic 4 + version 1 + w 2 + h 2 + region_count 2
inline constexpr int kRegionHeaderBytes = 15; // kind 1 + category_id 2 + bbox 8 + payload_len 4

enum class RegionKind : std::uint8_t { Background = 0, Object = 1 };

struct FrameRegion {
    RegionKind kind = RegionKind::Background;
    std::uint16_t category_id = 0;
    BBox bbox;
    std::vector<std::uint8_t> payload;

    bool operator==(const FrameRegion&) const = default;
};

/// On-wire representation of one encoded image. Regions are stored in
/// transmission order: background first, then objects by bbox center.
struct Frame {
    std::uint16_t width = 0;
    std::uint16_t height = 0;
    std::vector<FrameRegion> regions;

    bool operator==(const Frame&) const = default;
};

/// Big-endian byte layout per the frame format; parse(serialize(f)) == f.
std::vector<std::uint8_t> serialize_frame(const Frame& frame);
Frame parse_frame(std::span<const std::uint8_t> bytes);

struct CodeDims {
    int k = kLdpcInfoBits;
    int n = kLdpcCodedBits;
};

/// Worst-case wire bytes for a total source-bit pool split across
/// region_count regions: one coded unit for the header directory
/// (image header + all region headers), then payload blocks with the
/// maximal ceil waste of region_count - 1 extra blocks.
std::int64_t wire_cost_bytes(std::int64_t source_bits_total, int region_count,
                             CodeDims dims = {});

/// Exact inverse: the largest pool with wire_cost_bytes(pool, r) <= budget.
/// Throws when the budget cannot carry the directory plus one block per
/// region.
std::int64_t source_pool_bits(std::int64_t wire_budget_bytes, int region_count,
                              CodeDims dims = {});

/// Wire bytes a concrete frame occupies (exact, not worst-case).
std::int64_t frame_wire_bytes(const Frame& frame, CodeDims dims = {});

// ---------------------------------------------------------------------------
// Transmission

struct ChannelReport {
    double snr_db = 0.0;
    int frames_sent = 0;
    int blocks_total = 0;
    std::vector<int> decode_iterations; // one entry per coded block
    std::vector<bool> block_converged;
    int block_errors = 0;         // ground-truth info mismatches
    std::int64_t residual_bit_errors = 0;
    std::int64_t wire_bytes = 0;
};

struct ReceivedFrame {
    Frame frame;
    bool directory_ok = false;
    std::vector<bool> region_lost; // parallel to frame.regions
};

struct TransmitResult {
    ReceivedFrame received;
    std::vector<std::uint8_t> received_bytes; // re-serialized received frame
    ChannelReport report;
};

/// Per-block LDPC encode -> QAM-16 -> AWGN -> demap -> decode over the
/// frame's coded units: header directory first, then each region payload
/// (background leads by frame construction). A region is lost when any of
/// its blocks fails to converge; a failed directory loses everything.
TransmitResult transmit(const LdpcCode& code, const Frame& frame,
                        const ChannelState& channel, std::uint64_t seed);

} // namespace pace
