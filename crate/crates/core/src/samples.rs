//! Small fixed functions used by examples, tests and documentation.

/// A TensorFlow-Lite style kernel `Eval` with the elided initializers filled in
/// by plausible calls so that it parses.
pub const TF_EVAL: &str = "TFStatus Eval(TfContext* context, TfNode* node){
  TfIntArray* output_shape=GetOutputShape(node);
  const int lookup_rank=GetRank(node);
  TF_LITE_ENSURE(context, lookup_rank > 0);
  int k=0;
  size_t embedding_size=1;
  size_t lookup_size=1;
  for(int i=0;i<lookup_rank-1;i++,k++)
  {
    const size_t dim=GetDim(node, i);
    lookup_size *= dim;
    output_shape->data[k]=dim;
  }
  return Finish(context, embedding_size, lookup_size);
}";

/// A short Java method with a loop, a branch and a call.
pub const JAVA_SUM: &str = "public int sumPositive(int[] values, int limit) {
    int total = 0;
    for (int i = 0; i < values.length; i++) {
        if (values[i] > 0) {
            total += values[i];
        } else {
            total -= 1;
        }
    }
    return total > limit ? limit : total;
}";

/// A C++ function with a range-for loop.
pub const CPP_COUNT: &str = "int countAbove(const std::vector<int>& xs, int threshold) {
    int count_above = 0;
    for (const auto& x : xs) {
        if (x > threshold) {
            count_above++;
        }
    }
    return count_above;
}";
