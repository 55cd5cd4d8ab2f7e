package algebra;

interface MultiplicativeGroup  <T>
    extends MultiplicativeMonoid <T> {

    T getMultInv(); // the multiplicative inverse element

}
