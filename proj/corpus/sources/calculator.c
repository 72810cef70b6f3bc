#include <stdio.h>

double apply(char op, double a, double b, int *ok)
{
    *ok = 1;
    switch (op) {
    case '+':
        return a + b;
    case '-':
        return a - b;
    case '*':
        return a * b;
    case '/':
        if (b == 0) {
            *ok = 0;
            return 0;
        }
        return a / b;
    case '%':
        if ((int)b == 0) {
            *ok = 0;
            return 0;
        }
        return (int)a % (int)b;
    default:
        *ok = 0;
        return 0;
    }
}

int main()
{
    char op, more = 'y';
    double a, b, result, memory = 0;
    int ok;
    while (more == 'y' || more == 'Y') {
        printf("Enter expression (a op b), op one of + - * / %%: ");
        scanf("%lf %c %lf", &a, &op, &b);
        result = apply(op, a, b, &ok);
        if (ok) {
            printf("= %g\n", result);
            memory += result;
        } else {
            printf("Invalid operation\n");
        }
        printf("Running total: %g\n", memory);
        printf("Continue? (y/n): ");
        scanf(" %c", &more);
    }
    return 0;
}
