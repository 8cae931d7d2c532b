// Copyright 2026 The symtomo Authors
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

#include "symtomo/frames.hpp"

#include <cmath>
#include <sstream>

#include "symtomo/error.hpp"

namespace symtomo {

void validate_frame(const FrameParameters &f) {
    if (!std::isfinite(f.mu) || !std::isfinite(f.nu) || !std::isfinite(f.delta))
        throw_validation("invalid-frame", "frame parameters must be finite");
    if (f.mu == 0.0 && f.nu == 0.0) {
        std::ostringstream os;
        os << "degenerate frame: mu = nu = 0 (delta = " << f.delta << ")";
        throw_validation("invalid-frame", os.str());
    }
}

ConjugateFramePair conjugate_frame(const FrameParameters &frame) {
    validate_frame(frame);
    const double r2 = frame.scale_squared();
    return ConjugateFramePair{frame, -frame.nu / r2, frame.mu / r2, 0.0};
}

FrameParameters frame_from_squeezer(double s, double theta) {
    // cosh s - sinh s, written as exp(-s) to avoid cancellation at large s.
    const double scale = std::exp(-s);
    return FrameParameters{scale * std::cos(0.5 * theta), scale * std::sin(0.5 * theta), 0.0};
}

FrameParameters homodyne_frame(double phi) { return FrameParameters{std::cos(phi), std::sin(phi), 0.0}; }

}  // namespace symtomo
