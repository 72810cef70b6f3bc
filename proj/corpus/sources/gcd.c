#include <stdio.h>

int gcd(int a, int b)
{
    int t;
    while (b != 0) {
        t = b;
        b = a % b;
        a = t;
    }
    return a;
}

int main()
{
    int x, y, g, l;
    printf("Enter two positive integers: ");
    scanf("%d %d", &x, &y);
    if (x <= 0 || y <= 0) {
        printf("Both numbers must be positive\n");
        return 1;
    }
    g = gcd(x, y);
    l = (x / g) * y;
    printf("GCD = %d\n", g);
    printf("LCM = %d\n", l);
    return 0;
}
