#pragma once

#include "kif/gray_image.hpp"

namespace kif {

/// Standard k×k median filter with replicate border padding. k must be odd
/// and at least 3.
GrayImage median_filter(const GrayImage& image, int k = 3);

/// Two-level adaptive median filter (Hwang & Haddad). Windows grow from 3×3
/// by 2 up to `max_window`; a pixel is kept when the window median is not an
/// extreme and the pixel itself is strictly between the window min and max.
/// If no window up to `max_window` has a non-extreme median, the median of
/// the largest window is used.
GrayImage adaptive_median_filter(const GrayImage& image, int max_window = 7);

} // namespace kif
