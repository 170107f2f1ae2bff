#include "pretzelccs/trig.hpp"

namespace pretzel {

RationalInterval cos_enclosure(const Rat& x, const Rat& target_width) {
    if (target_width <= 0) throw Error("cos_enclosure: width must be positive");
    if (abs(x) > 16) throw Error("cos_enclosure: |x| too large");
    const Rat x2 = x * x;
    Rat sum = 1, term = 1;
    unsigned long k = 0;
    while (true) {
        // term for index k+1
        Rat next = term * x2 / Rat((2 * k + 1) * (2 * k + 2));
        // Once consecutive term ratios stay below 1/2, the tail is
        // bounded by twice the first omitted term.
        bool tail_decays = 2 * x2 <= Rat((2 * k + 3) * (2 * k + 4));
        if (tail_decays && 4 * next <= target_width) {
            Rat bound = 2 * next;
            return {sum - bound, sum + bound};
        }
        term = next;
        ++k;
        sum += (k % 2 == 0) ? term : -term;
        if (k > 10000) throw Error("cos_enclosure: series did not converge");
    }
}

}  // namespace pretzel
