#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tdsr {

// Stable error codes; the CLI maps these to exit status 1 diagnostics.
enum class Errc {
    MalformedLine,
    VertexOutOfRange,
    SelfLoop,
    OrderTooLarge,
    BadParameter,
    IsolatedVertex,
    VertexNotInSet,
    NotATds,
    SizeExceedsK,
    CapExceeded,
    TooLarge,
    NotConnected,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::MalformedLine: return "MalformedLine";
        case Errc::VertexOutOfRange: return "VertexOutOfRange";
        case Errc::SelfLoop: return "SelfLoop";
        case Errc::OrderTooLarge: return "OrderTooLarge";
        case Errc::BadParameter: return "BadParameter";
        case Errc::IsolatedVertex: return "IsolatedVertex";
        case Errc::VertexNotInSet: return "VertexNotInSet";
        case Errc::NotATds: return "NotATds";
        case Errc::SizeExceedsK: return "SizeExceedsK";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::TooLarge: return "TooLarge";
        case Errc::NotConnected: return "NotConnected";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

// A vertex subset as a bitmask over 0..n-1. Orders are capped at kMaxOrder so
// that any subset fits in one machine word.
using VertexSet = std::uint32_t;

inline constexpr int kMaxOrder = 30;

inline constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

inline constexpr VertexSet full_set(int n) { return n == 0 ? 0u : (VertexSet{1} << n) - 1u; }

inline int set_size(VertexSet s) { return std::popcount(s); }

inline bool set_contains(VertexSet s, int v) { return (s >> v) & 1u; }

template <typename F>
inline void for_each_member(VertexSet s, F&& f) {
    while (s) {
        f(std::countr_zero(s));
        s &= s - 1;
    }
}

inline std::vector<int> set_members(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(set_size(s)));
    for_each_member(s, [&](int v) { out.push_back(v); });
    return out;
}

// "{0,1,4}"; empty set prints "{}"
inline std::string set_to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for_each_member(s, [&](int v) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    });
    out += '}';
    return out;
}

// lowercase hex with 0x prefix, e.g. "0x33"; empty set prints "0x0"
inline std::string set_to_hex(VertexSet s) {
    static const char* digits = "0123456789abcdef";
    if (s == 0) return "0x0";
    char buf[11];
    int pos = 10;
    while (s) {
        buf[--pos] = digits[s & 0xf];
        s >>= 4;
    }
    return "0x" + std::string(buf + pos, buf + 10);
}

// Parses a comma-separated vertex list such as "0,1,4"; "" is the empty set.
inline VertexSet parse_vertex_list(const std::string& text, int n) {
    VertexSet out = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string tok = text.substr(pos, next - pos);
        if (tok.empty()) fail(Errc::BadParameter, "empty entry in vertex list \"" + text + "\"");
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            fail(Errc::BadParameter, "bad vertex \"" + tok + "\"");
        }
        if (used != tok.size()) fail(Errc::BadParameter, "bad vertex \"" + tok + "\"");
        if (v < 0 || v >= n) fail(Errc::VertexOutOfRange, "vertex " + tok + " not in 0.." + std::to_string(n - 1));
        out |= vbit(v);
        pos = next + 1;
    }
    return out;
}

}  // namespace tdsr
