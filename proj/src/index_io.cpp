// SPDX-License-Identifier: Apache-2.0

#include "sus/index_io.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace sus {
namespace {

void put_u64(std::ostream& out, std::uint64_t v) {
    std::array<char, 8> bytes{};
    for (int b = 0; b < 8; ++b) bytes[b] = static_cast<char>((v >> (8 * b)) & 0xFF);
    out.write(bytes.data(), bytes.size());
}

std::uint64_t get_u64(std::istream& in) {
    std::array<unsigned char, 8> bytes{};
    if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
        throw FormatError("index file is truncated");
    }
    std::uint64_t v = 0;
    for (int b = 7; b >= 0; --b) v = (v << 8) | bytes[b];
    return v;
}

void put_array(std::ostream& out, std::span<const Index> values) {
    for (Index v : values) put_u64(out, v);
}

IndexArray get_array(std::istream& in, std::size_t count, std::uint64_t max_value) {
    IndexArray values(count);
    for (auto& v : values) {
        const std::uint64_t raw = get_u64(in);
        if (raw > max_value) throw FormatError("index value " + std::to_string(raw) + " out of range");
        v = static_cast<Index>(raw);
    }
    return values;
}

} // namespace

void write_index(std::ostream& out, const SuffixContext& ctx) {
    out.write(kIndexMagic, sizeof kIndexMagic);
    put_u64(out, ctx.size());
    put_array(out, ctx.sa());
    put_array(out, ctx.rank());
    put_array(out, ctx.lcp());
    if (!out) throw IoError("failed to write index");
}

void write_index_file(const std::string& path, const SuffixContext& ctx) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_index(out, ctx);
    out.flush();
    if (!out) throw IoError("failed to write '" + path + "'");
}

SuffixContext read_index(std::istream& in, std::string text) {
    char magic[sizeof kIndexMagic];
    if (!in.read(magic, sizeof magic) || std::memcmp(magic, kIndexMagic, sizeof magic) != 0) {
        throw FormatError("not a SUS index (bad magic)");
    }
    const std::uint64_t n = get_u64(in);
    if (n == 0 || n > kMaxTextLength) throw FormatError("index length " + std::to_string(n) + " is invalid");
    if (n != text.size()) {
        throw FormatError("index is for a text of " + std::to_string(n) + " bytes, input has " +
                          std::to_string(text.size()));
    }

    // Reject a payload that is shorter or longer than 3n+1 words before
    // allocating, when the stream is seekable.
    const auto here = in.tellg();
    if (here != std::istream::pos_type(-1)) {
        in.seekg(0, std::ios::end);
        const auto end = in.tellg();
        in.seekg(here);
        const std::uint64_t expected = (3 * n + 1) * 8;
        if (static_cast<std::uint64_t>(end - here) != expected) {
            throw FormatError("index payload is " + std::to_string(end - here) + " bytes, expected " +
                              std::to_string(expected));
        }
    }

    auto sa = get_array(in, n, n);
    auto rank = get_array(in, n, n);
    auto lcp = get_array(in, n + 1, n);
    if (in.peek() != std::istream::traits_type::eof()) throw FormatError("trailing bytes after index");
    return SuffixContext::from_parts(std::move(text), std::move(sa), std::move(rank), std::move(lcp));
}

SuffixContext read_index_file(const std::string& path, std::string text) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_index(in, std::move(text));
}

} // namespace sus
