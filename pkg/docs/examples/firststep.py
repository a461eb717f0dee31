# begin firststep
from derangelab import (Permutation, stats, psi_hat, iota,
                        main_theorem_values)

# One-line notation, 1-based: 1 goes to 2, 2 to 1, 3 to 4, 4 to 3.
p = Permutation.parse("2143")

# Every statistic in one pass
report = stats(p)
print("exc=%s rlm=%s sign=%s" % (report.exc, report.rlm, report.sign))

# The sign-reversing maps take permutations to permutations
print("psi-hat: %s -> %s" % (p, psi_hat(p)))
print("iota:    %s -> %s" % (p, iota(p)))

# Certify the signed rlm/exc identity for n = 5 by brute force
result = main_theorem_values(5)
print("%s n=%s equal=%s" % (result.identity, result.n, result.equal))
# end firststep

return_value = (report.exc, report.rlm, report.sign, result.equal)
