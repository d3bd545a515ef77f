#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "annulus/geometry.hpp"

namespace annulus {

// Horizontal strip bounded by the lines through a (top) and b (bottom),
// y(a) > y(b). All geometry is kept in a frame where x(a) > x(b): when the
// input pair has x(a) < x(b) the strip is built with all x negated and
// `mirrored` set, and strip results are un-mirrored on output.
//
// pts holds Q: every point with y(b) <= y <= y(a), ascending by frame x,
// with original ids. Q partitions as
//   L = pts[0 .. b_pos]        (x <= x(b); b is the rightmost element)
//   M = pts[b_pos+1 .. a_pos-1]
//   R = pts[a_pos .. size-1]   (x >= x(a); a is the leftmost element)
struct Strip {
    std::vector<Point> pts;
    int b_pos = -1;
    int a_pos = -1;
    bool mirrored = false;

    int size() const { return static_cast<int>(pts.size()); }
    const Point& a() const { return pts[a_pos]; }
    const Point& b() const { return pts[b_pos]; }
    const Point& leftmost() const { return pts.front(); }
    const Point& rightmost() const { return pts.back(); }
    int left_count() const { return b_pos + 1; }
    int mid_count() const { return a_pos - b_pos - 1; }
    int right_count() const { return size() - a_pos; }

    // Neighbor points of the case analysis; null when absent.
    // p, p', p1: first, second, third point right of a in Q.
    // q, q', q1: first, second, third point left of b in Q.
    const Point* p() const { return right_of_a(1); }
    const Point* p_prime() const { return right_of_a(2); }
    const Point* p1() const { return right_of_a(3); }
    const Point* q() const { return left_of_b(1); }
    const Point* q_prime() const { return left_of_b(2); }
    const Point* q1() const { return left_of_b(3); }

    const Point* right_of_a(int k) const {
        return a_pos + k < size() ? &pts[a_pos + k] : nullptr;
    }
    const Point* left_of_b(int k) const {
        return b_pos - k >= 0 ? &pts[b_pos - k] : nullptr;
    }
};

// Builds S(a,b) from the points sorted ascending by x. Requires general
// position and y(a) > y(b); runs in O(n).
Strip build_strip(std::span<const Point> points_by_x, const Point& a,
                  const Point& b);

enum class ConfigLabel {
    kCaseI,
    kCaseIIA1,
    kCaseIIA2,
    kCaseIIA3,
    kCaseIIIA1,
    kCaseIIIA2,
};

const char* to_string(ConfigLabel label);

struct InitialConfig {
    Annulus annulus;  // in the strip frame
    ConfigLabel label;
};

// The case-based initial annuli for the strip, in the frame of the strip.
// Configurations whose required neighbor points do not exist are omitted;
// an empty result means E(a,b) contains no annulus.
std::vector<InitialConfig> initial_configurations(const Strip& strip);

struct SweepOutcome {
    Annulus best;      // in the strip frame
    double width = 0.0;
    int iterations = 0;  // outer-edge shifts performed
};

// Runs the per-strip sweep loop from one initial annulus: stop when the top-
// or bottom-width determines the width (ties resolve toward top/bottom), or
// when the determining side edge has reached the end of its event list;
// otherwise shift that side's outer edge to its next event point, absorbing
// the vacated point. A left/right tie shifts left. Every annulus the sweep
// holds is appended to *visited when given.
SweepOutcome sweep_one(const Annulus& config, const Strip& strip,
                       std::vector<Annulus>* visited = nullptr);

// Best annulus over one strip and where it came from.
struct Solution {
    Annulus annulus;
    double width = 0.0;
    std::string origin;  // e.g. "strip(4,7) case II A3", "brute", "degenerate"
    int a_id = -1;       // strip pair, -1 when not strip-based
    int b_id = -1;
};

// Max of sweep_one over the initial configurations, un-mirrored back to
// input coordinates; nullopt when no configuration is feasible. Equal widths
// keep the earliest configuration.
std::optional<Solution> sweep_strip(const Strip& strip);

// Global solver: best sweep_strip result over all ordered pairs (a, b) with
// y(a) > y(b). Width ties break toward the smallest (a.id, b.id), so the
// result does not depend on evaluation order. Throws std::invalid_argument
// when the input violates general position.
//
// solve_max_annulus runs strips in parallel with OpenMP (threads <= 0 picks
// the runtime default); solve_max_annulus_serial is the plain reference
// implementation kept for differential testing.
std::optional<Solution> solve_max_annulus(std::span<const Point> points,
                                          int threads = 0);
std::optional<Solution> solve_max_annulus_serial(std::span<const Point> points);

namespace testhooks {
// Fault injection for the verification harness self-test: when set, the
// sweep stops on an exact left/right-width tie instead of shifting, which is
// deliberately wrong. Never set outside tests.
extern bool g_fault_stop_on_lr_tie;
}  // namespace testhooks

}  // namespace annulus
