// Copyright 2026 The ampamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ampamp/errors.hpp"

namespace ampamp {

/// Assignment z_1..z_N of binary variables.
///
/// Convention used everywhere in the library and its file formats: z_1 is the
/// first-listed character of the text form and bit 0 of the basis index, and
/// it pairs with weight W_1 and qubit q_1. So "100" is basis index 1.
class Bitstring {
   public:
    static constexpr int kMaxBits = 63;

    Bitstring() = default;

    Bitstring(std::uint64_t index, int n_bits) : bits_(index), size_(n_bits) {
        if (n_bits < 0 || n_bits > kMaxBits) throw CapacityError("bitstring length out of range");
        if (n_bits < 64 && (index >> n_bits) != 0) throw InputError("basis index does not fit in bitstring");
    }

    static Bitstring parse(std::string_view text) {
        if (text.size() > static_cast<std::size_t>(kMaxBits)) throw CapacityError("bitstring too long");
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '1') {
                bits |= std::uint64_t{1} << i;
            } else if (text[i] != '0') {
                throw InputError("bitstring '" + std::string(text) + "' has a character other than 0/1");
            }
        }
        return Bitstring(bits, static_cast<int>(text.size()));
    }

    int size() const { return size_; }
    std::uint64_t index() const { return bits_; }

    /// z_{i+1}, zero-based.
    bool operator[](int i) const { return ((bits_ >> i) & 1U) != 0; }

    Bitstring inverted() const {
        std::uint64_t mask = size_ == 0 ? 0 : (~std::uint64_t{0} >> (64 - size_));
        return Bitstring(~bits_ & mask, size_);
    }

    std::string to_string() const {
        std::string out(static_cast<std::size_t>(size_), '0');
        for (int i = 0; i < size_; ++i) {
            if ((*this)[i]) out[static_cast<std::size_t>(i)] = '1';
        }
        return out;
    }

    friend bool operator==(const Bitstring&, const Bitstring&) = default;

   private:
    std::uint64_t bits_ = 0;
    int size_ = 0;
};

}  // namespace ampamp
