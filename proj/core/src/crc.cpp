// Copyright 2026 The rc4ft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rc4ft/crc.hpp"

namespace rc4ft {

CrcArray build_crc_array() {
    CrcArray array;
    for (int n = 0; n < 256; ++n)
        array.table_[n] = crc4(static_cast<std::uint8_t>(n));
    return array;
}

CheckerVerdict verify_entry(const CodedEntry& entry, const CrcArray& array) {
    return {entry.crc == array.at(entry.value), true};
}

CheckerVerdict check_access(const CodedEntry& si, const CodedEntry& sj,
                            const CrcArray& array) {
    return {verify_entry(si, array).ok && verify_entry(sj, array).ok, true};
}

}  // namespace rc4ft
